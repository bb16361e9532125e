#include "bnfix/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bnfix/errors.hpp"
#include "bnfix/io.hpp"
#include "bnfix/network.hpp"
#include "bnfix/oracle.hpp"
#include "bnfix/synth.hpp"
#include "bnfix/words.hpp"

namespace bnfix {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BooleanNetwork load_network(const std::string& path) {
  try {
    return parse_network(read_file(path));
  } catch (const parse_error& e) {
    throw parse_error(path + ":" + e.what());
  }
}

Digraph load_digraph(const std::string& path) {
  try {
    return parse_digraph(read_file(path));
  } catch (const parse_error& e) {
    throw parse_error(path + ":" + e.what());
  }
}

struct Report {
  std::ostream& out;
  bool porcelain;

  void field(const std::string& key, const std::string& value,
             const std::string& label = "") const {
    if (porcelain)
      out << key << '=' << value << '\n';
    else
      out << (label.empty() ? key : label) << ": " << value << '\n';
  }
  // string literals must not fall into the bool overload
  void field(const std::string& key, const char* value,
             const std::string& label = "") const {
    field(key, std::string(value), label);
  }
  void field(const std::string& key, bool value, const std::string& label = "") const {
    field(key, std::string(value ? "true" : "false"), label);
  }
  void field(const std::string& key, std::uint64_t value,
             const std::string& label = "") const {
    field(key, std::to_string(value), label);
  }
  void word(const Word& w) const {
    field("word", porcelain ? format_word_csv(w) : format_word(w));
    const std::string compact = format_word_compact(w);
    if (!compact.empty() && !w.empty()) field("compact", compact);
    field("length", static_cast<std::uint64_t>(w.size()));
  }
};

int cmd_analyze(const Report& r, const std::string& net_path) {
  const BooleanNetwork f = load_network(net_path);
  r.field("n", static_cast<std::uint64_t>(f.n()), "components");
  r.field("states", std::uint64_t{1} << f.n());
  const auto fps = fixed_points(f);
  std::string list;
  for (std::size_t i = 0; i < fps.size(); ++i) {
    if (i) list += ',';
    list += fps[i].to_string();
  }
  r.field("fixed_points", list, "fixed points");
  r.field("fixed_point_count", static_cast<std::uint64_t>(fps.size()),
          "fixed point count");
  r.field("fixable", is_fixable(f));
  r.field("monotone", is_monotone(f));
  if (f.n() <= kAsyncGraphLimit) {
    r.field("async_acyclic", is_async_acyclic(f), "async-acyclic");
    r.field("async_arcs", async_arc_count(f), "async arcs");
  }
  r.field("interaction_arcs",
          static_cast<std::uint64_t>(interaction_graph(f).arc_count()),
          "interaction arcs");
  return 0;
}

int cmd_verify(const Report& r, const std::string& net_path, const std::string& word_arg) {
  const BooleanNetwork f = load_network(net_path);
  const Word w = parse_word_arg(word_arg, f.n());
  const bool ok = fixes(f, w);
  r.field("fixes", ok);
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"asynchronous Boolean network dynamics and fixing words"};
  app.name("bnfix");
  app.require_subcommand(1);
  bool porcelain = false;
  bool force = false;
  app.add_flag("--porcelain", porcelain, "machine-readable key=value output");
  app.add_flag("--force", force, "run exact searches beyond their size bounds");

  int rc = 0;
  auto rep = [&]() { return Report{out, porcelain}; };

  // analyze
  std::string analyze_net;
  auto* analyze = app.add_subcommand("analyze", "structural report for a network");
  analyze->add_option("network", analyze_net, "network file")->required();
  analyze->callback([&] { rc = cmd_analyze(rep(), analyze_net); });

  // verify
  std::string verify_net, verify_word;
  auto* verify = app.add_subcommand("verify", "check that a word fixes a network");
  verify->add_option("network", verify_net, "network file")->required();
  verify->add_option("-w,--word", verify_word, "candidate fixing word")->required();
  verify->callback([&] { rc = cmd_verify(rep(), verify_net, verify_word); });

  // synth
  std::string synth_family, synth_graph, synth_net;
  std::vector<std::string> synth_nets;
  int synth_n = 0;
  auto* synth = app.add_subcommand("synth", "synthesize a fixing word");
  synth->add_option("--family", synth_family, "tree|feedback|symmetric-conj|path-universal|acyclic-instance|greedy")
      ->required()
      ->check(CLI::IsMember({"tree", "feedback", "symmetric-conj", "path-universal",
                             "acyclic-instance", "greedy"}));
  synth->add_option("--graph", synth_graph, "digraph file");
  synth->add_option("--net", synth_nets, "network file (repeatable for greedy)");
  synth->add_option("-n", synth_n, "component count");
  synth->callback([&] {
    const Report r = rep();
    auto need_graph = [&]() -> Digraph {
      if (synth_graph.empty()) throw parse_error("--family " + synth_family + " needs --graph");
      return load_digraph(synth_graph);
    };
    auto need_n = [&]() {
      if (synth_n < 1) throw parse_error("--family " + synth_family + " needs -n");
      return synth_n;
    };
    Word w;
    if (synth_family == "tree") {
      w = tree_word(need_graph());
    } else if (synth_family == "feedback") {
      w = feedback_word(need_graph(), force);
    } else if (synth_family == "symmetric-conj") {
      w = symmetric_conjunctive_word(need_n());
    } else if (synth_family == "path-universal") {
      w = path_universal_word(need_n());
    } else if (synth_family == "acyclic-instance") {
      if (synth_nets.size() != 1)
        throw parse_error("--family acyclic-instance needs exactly one --net");
      w = acyclic_instance_word(load_network(synth_nets[0]));
    } else {  // greedy
      if (synth_nets.empty()) throw parse_error("--family greedy needs --net");
      std::vector<BooleanNetwork> family;
      for (const auto& path : synth_nets) family.push_back(load_network(path));
      w = greedy_fix_word(family);
    }
    r.word(w);
    rc = 0;
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact brute-force ground truth");
  oracle->require_subcommand(1);

  std::string omin_net;
  auto* omin = oracle->add_subcommand("min-length", "exact fixing length of one network");
  omin->add_option("network", omin_net, "network file")->required();
  omin->callback([&] {
    const Report r = rep();
    const auto len = min_fixing_length(load_network(omin_net), force);
    r.field("fixable", len.has_value());
    if (len) {
      r.field("lambda", static_cast<std::uint64_t>(*len), "fixing length");
      rc = 0;
    } else {
      if (!porcelain) out << "not fixable\n";
      rc = 1;
    }
  });

  std::string ofam_kind, ofam_graph;
  std::vector<std::string> ofam_nets;
  int ofam_n = 0, ofam_budget = -1;
  auto* ofam = oracle->add_subcommand("family-min-length", "exact fixing length of a family");
  ofam->add_option("--family", ofam_kind, "all|monotone|async-acyclic|conjunctive-symmetric|monotone-on|list")
      ->required()
      ->check(CLI::IsMember({"all", "monotone", "async-acyclic", "conjunctive-symmetric",
                             "monotone-on", "list"}));
  ofam->add_option("-n", ofam_n, "component count");
  ofam->add_option("--graph", ofam_graph, "digraph file (monotone-on)");
  ofam->add_option("--net", ofam_nets, "network files (list)");
  ofam->add_option("--budget", ofam_budget, "largest word length to try")->required();
  ofam->callback([&] {
    const Report r = rep();
    std::optional<int> result;
    std::uint64_t size = 0;
    if (ofam_kind == "list") {
      if (ofam_nets.empty()) throw parse_error("--family list needs --net");
      std::vector<BooleanNetwork> family;
      for (const auto& path : ofam_nets) family.push_back(load_network(path));
      size = family.size();
      result = family_min_fixing_length(family, family[0].n(), ofam_budget);
    } else {
      std::optional<NetworkFamily> family;
      if (ofam_kind == "monotone-on") {
        if (ofam_graph.empty()) throw parse_error("--family monotone-on needs --graph");
        family = NetworkFamily::monotone_on(load_digraph(ofam_graph));
      } else {
        if (ofam_n < 1) throw parse_error("--family " + ofam_kind + " needs -n");
        if (ofam_kind == "all")
          family = NetworkFamily::all(ofam_n, force);
        else if (ofam_kind == "monotone")
          family = NetworkFamily::monotone(ofam_n, force);
        else if (ofam_kind == "async-acyclic")
          family = NetworkFamily::async_acyclic(ofam_n, force);
        else
          family = NetworkFamily::conjunctive_symmetric(ofam_n, force);
      }
      size = family->count();
      result = family_min_fixing_length(*family, ofam_budget);
    }
    r.field("family_size", size, "family size");
    if (result) {
      r.field("lambda", static_cast<std::uint64_t>(*result), "fixing length");
      rc = 0;
    } else {
      if (!porcelain)
        out << "no fixing word within budget " << ofam_budget << "\n";
      else
        r.field("lambda", "none");
      rc = 1;
    }
  });

  int olam_n = 0, olam_k = 0;
  auto* olam = oracle->add_subcommand("lambda", "minimum (n,k)-universal word length");
  olam->add_option("-n", olam_n, "alphabet size")->required();
  olam->add_option("-k", olam_k, "universality defect (default 0)");
  olam->callback([&] {
    const Report r = rep();
    r.field("lambda", static_cast<std::uint64_t>(min_universal_length(olam_n, olam_k, force)),
            "lambda_" + std::to_string(olam_k) + "(" + std::to_string(olam_n) + ")");
    rc = 0;
  });

  int obig_n = 0;
  auto* obig = oracle->add_subcommand("big-lambda", "minimum n-path-universal word length");
  obig->add_option("-n", obig_n, "cube dimension")->required();
  obig->callback([&] {
    const Report r = rep();
    r.field("big_lambda",
            static_cast<std::uint64_t>(min_path_universal_length(obig_n, force)),
            "Lambda(" + std::to_string(obig_n) + ")");
    rc = 0;
  });

  int ophi_n = 0;
  auto* ophi = oracle->add_subcommand("phi", "exact fraction of fixable networks");
  ophi->add_option("-n", ophi_n, "component count")->required();
  ophi->callback([&] {
    const Report r = rep();
    const Rational phi = fixable_fraction(ophi_n, force);
    r.field("phi", std::to_string(phi.num) + "/" + std::to_string(phi.den),
            "phi(" + std::to_string(ophi_n) + ")");
    rc = 0;
  });

  // words
  auto* words = app.add_subcommand("words", "combinatorics on words");
  words->require_subcommand(1);

  int wuni_n = 0, wuni_k = 0;
  std::string wuni_word;
  auto* wuni = words->add_subcommand("check-universal", "(n,k)-universality test");
  wuni->add_option("-n", wuni_n, "alphabet size")->required();
  wuni->add_option("-k", wuni_k, "universality defect (default 0)");
  wuni->add_option("-w,--word", wuni_word, "word to test")->required();
  wuni->callback([&] {
    const Report r = rep();
    const bool ok = is_k_universal(parse_word_arg(wuni_word, wuni_n), wuni_n, wuni_k, force);
    r.field("result", ok, "universal");
    rc = ok ? 0 : 1;
  });

  int wpw_n = 0;
  std::string wpw_word;
  auto* wpw = words->add_subcommand("check-path-word", "is the word induced by a cube path");
  wpw->add_option("-n", wpw_n, "cube dimension")->required();
  wpw->add_option("-w,--word", wpw_word, "word to test")->required();
  wpw->callback([&] {
    const Report r = rep();
    const bool ok = is_path_word(parse_word_arg(wpw_word, wpw_n), wpw_n);
    r.field("result", ok, "path word");
    rc = ok ? 0 : 1;
  });

  int wpu_n = 0;
  std::string wpu_word;
  auto* wpu = words->add_subcommand("check-path-universal", "does the word contain all path words");
  wpu->add_option("-n", wpu_n, "cube dimension")->required();
  wpu->add_option("-w,--word", wpu_word, "word to test")->required();
  wpu->callback([&] {
    const Report r = rep();
    const bool ok = is_path_universal(parse_word_arg(wpu_word, wpu_n), wpu_n, force);
    r.field("result", ok, "path universal");
    rc = ok ? 0 : 1;
  });

  int wgray_n = 0;
  auto* wgray = words->add_subcommand("gray", "word induced by the Gray-code path");
  wgray->add_option("-n", wgray_n, "cube dimension")->required();
  wgray->callback([&] {
    rep().word(gray_word(wgray_n));
    rc = 0;
  });

  int wzig_n = 0, wzig_k = 0;
  auto* wzig = words->add_subcommand("zigzag", "the (n,k)-universal zigzag word");
  wzig->add_option("-n", wzig_n, "alphabet size")->required();
  wzig->add_option("-k", wzig_k, "universality defect (default 0)");
  wzig->callback([&] {
    rep().word(zigzag_universal(wzig_n, wzig_k));
    rc = 0;
  });

  // export-dot
  std::string dot_kind, dot_net;
  auto* dot = app.add_subcommand("export-dot", "DOT rendering of a network's graphs");
  dot->add_option("kind", dot_kind, "async|interaction")
      ->required()
      ->check(CLI::IsMember({"async", "interaction"}));
  dot->add_option("network", dot_net, "network file")->required();
  dot->callback([&] {
    const BooleanNetwork f = load_network(dot_net);
    out << (dot_kind == "async" ? export_dot_async(f, force) : export_dot_interaction(f));
    rc = 0;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const infeasible_error& e) {
    err << "error: " << e.what() << "\n";
    err << "(pass --force to accept the cost)\n";
    return 3;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace bnfix
