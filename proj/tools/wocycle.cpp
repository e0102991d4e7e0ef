// Command-line interface: generate, verify, count, enumerate, inspect, dot.
//
// Exit codes: 0 success, 1 usage or parameter error, 2 no cycle exists for
// the request (graph diagnosis on stderr), 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wocycle/cycle_io.hpp"
#include "wocycle/oracle.hpp"

namespace {

using nlohmann::json;
using namespace wocycle;

json word_json(const Word& w) { return json(w); }

json words_json(const std::vector<Word>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(word_json(w));
  return arr;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw domain_error(errc::parameter, "cannot open output file " + out_path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error(errc::parameter, "cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GenerateArgs {
  std::string family;
  int overlap = -1;
  bool ucycle = false;
  bool canonical = false;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  if (a.ucycle == (a.overlap >= 0)) {
    std::cerr << json{{"error", "parameter"},
                      {"message", "pass exactly one of --ucycle or --overlap N"}}
              << "\n";
    return 1;
  }
  const Family f = Family::parse(a.family);
  CycleResult cycle = a.ucycle ? generate_ucycle(f) : generate_ocycle(f, a.overlap);
  if (a.canonical) rotate_to_canonical(cycle);
  emit(format_cycle_file(cycle), a.out);
  return 0;
}

struct VerifyArgs {
  std::string file;
  std::string family;
  int overlap = -1;
};

int run_verify(const VerifyArgs& a) {
  const Family f = Family::parse(a.family);
  const CycleFile cf = parse_cycle_file(slurp(a.file));
  CycleResult cycle;
  cycle.symbols = cf.symbols;
  cycle.family = f.descriptor();
  if (a.overlap >= 0)
    cycle.overlap = a.overlap;
  else if (cf.overlap)
    cycle.overlap = *cf.overlap;
  else
    throw domain_error(errc::parameter, "overlap unknown: pass --overlap or a file header");
  cycle.object_length = cf.object_length ? *cf.object_length : f.word_length();
  cycle.object_count = cf.object_count ? *cf.object_count : 0;

  const VerificationReport report = verify_cycle(cycle, f);
  std::cout << json{{"ok", report.ok},
                    {"missing", words_json(report.missing)},
                    {"duplicated", words_json(report.duplicated)},
                    {"invalid_windows", words_json(report.invalid_windows)},
                    {"overlap_violations", report.overlap_violations}}
            << "\n";
  return report.ok ? 0 : 3;
}

int run_count(const std::string& family) {
  std::cout << count(Family::parse(family)) << "\n";
  return 0;
}

int run_enumerate(const std::string& family) {
  for (const auto& w : enumerate(Family::parse(family))) std::cout << word_to_string(w) << "\n";
  return 0;
}

int run_inspect(const std::string& family, int overlap) {
  const Family f = Family::parse(family);
  const auto g = build_graph(enumerate(f), overlap, f.descriptor());
  const GraphSummary s = summarize(g);
  std::cout << json{{"family", f.descriptor()},
                    {"overlap", overlap},
                    {"vertices", s.vertices},
                    {"edges", s.edges},
                    {"components", s.components},
                    {"balanced", s.balanced}}
            << "\n";
  return 0;
}

int run_dot(const std::string& family, int overlap, const std::string& out) {
  const Family f = Family::parse(family);
  emit(export_dot(build_graph(enumerate(f), overlap, f.descriptor())), out);
  return 0;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const cycle_error& e) {
    json diag{{"message", e.what()}};
    if (e.why() == cycle_error::reason::not_balanced) {
      diag["error"] = "not_balanced";
      diag["vertex"] = word_json(e.balance()->vertex);
      diag["in_degree"] = e.balance()->in_degree;
      diag["out_degree"] = e.balance()->out_degree;
    } else {
      diag["error"] = "not_connected";
      diag["components"] = e.connectivity()->components;
      diag["component_sizes"] = e.connectivity()->sizes;
      diag["representatives"] = words_json(e.connectivity()->representatives);
    }
    std::cerr << diag << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << json{{"error", errc_name(e.code())}, {"message", e.what()}} << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}} << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal cycles and s-overlap cycles for weak orders"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* cmd_generate = app.add_subcommand("generate", "build a cycle and print it");
  cmd_generate->add_option("family", gen.family, "family descriptor, e.g. wn:n=4")->required();
  cmd_generate->add_flag("--ucycle", gen.ucycle, "full-overlap cycle for the family");
  cmd_generate->add_option("--overlap", gen.overlap, "overlap size s");
  cmd_generate->add_flag("--canonical", gen.canonical, "emit the least aligned rotation");
  cmd_generate->add_option("--out", gen.out, "write to a file instead of stdout");

  VerifyArgs ver;
  auto* cmd_verify = app.add_subcommand("verify", "check a cycle file against a family");
  cmd_verify->add_option("file", ver.file, "cycle file")->required();
  cmd_verify->add_option("family", ver.family, "family descriptor")->required();
  cmd_verify->add_option("--overlap", ver.overlap, "overlap size (default: file header)");

  std::string fam;
  auto* cmd_count = app.add_subcommand("count", "print the family size");
  cmd_count->add_option("family", fam, "family descriptor")->required();
  auto* cmd_enumerate = app.add_subcommand("enumerate", "print the family, one word per line");
  cmd_enumerate->add_option("family", fam, "family descriptor")->required();

  int overlap = -1;
  std::string out_path;
  auto* cmd_inspect = app.add_subcommand("inspect", "print a transition graph summary as JSON");
  cmd_inspect->add_option("family", fam, "family descriptor")->required();
  cmd_inspect->add_option("--overlap", overlap, "overlap size s")->required();
  auto* cmd_dot = app.add_subcommand("dot", "export the transition graph as DOT");
  cmd_dot->add_option("family", fam, "family descriptor")->required();
  cmd_dot->add_option("--overlap", overlap, "overlap size s")->required();
  cmd_dot->add_option("--out", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  if (*cmd_generate) return guarded([&] { return run_generate(gen); });
  if (*cmd_verify) return guarded([&] { return run_verify(ver); });
  if (*cmd_count) return guarded([&] { return run_count(fam); });
  if (*cmd_enumerate) return guarded([&] { return run_enumerate(fam); });
  if (*cmd_inspect) return guarded([&] { return run_inspect(fam, overlap); });
  if (*cmd_dot) return guarded([&] { return run_dot(fam, overlap, out_path); });
  return 1;
}
