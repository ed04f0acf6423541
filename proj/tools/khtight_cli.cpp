// khtight: transverse braid invariants and tightness verdicts from the
// command line.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "khtight/braid.hpp"
#include "khtight/classical.hpp"
#include "khtight/filtered.hpp"
#include "khtight/homology.hpp"
#include "khtight/json_io.hpp"
#include "khtight/khovanov.hpp"
#include "khtight/lattice.hpp"
#include "khtight/surgery.hpp"
#include "khtight/verdict.hpp"

namespace {

using namespace khtight;
using json = nlohmann::ordered_json;

struct BraidArgs {
  std::string braid;
  int strands = 0;

  BraidWord word() const {
    return parse_braid(braid, strands > 0 ? std::optional<int>(strands) : std::nullopt);
  }
};

void add_braid(CLI::App* cmd, BraidArgs& args, bool required = true) {
  auto* opt = cmd->add_option("-b,--braid", args.braid, "braid word, e.g. \"-1,-1,2,1,1,1,2\"");
  if (required) opt->required();
  cmd->add_option("--strands", args.strands, "strand count (default: largest generator + 1)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MathError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }
std::string opt_str(const std::optional<long long>& v) { return v ? std::to_string(*v) : "-"; }

// Homology table with one row per diagonal q - 2i and one column per i.
void print_table(const HomologyTable& h) {
  if (h.dims.empty()) {
    std::cout << "(zero)\n";
    return;
  }
  std::set<int> is, deltas;
  for (const auto& [k, v] : h.dims) {
    is.insert(k.first);
    deltas.insert(k.second - 2 * k.first);
  }
  std::cout << std::setw(8) << "q-2i\\i";
  for (int i : is) std::cout << std::setw(5) << i;
  std::cout << '\n';
  for (auto it = deltas.rbegin(); it != deltas.rend(); ++it) {
    std::cout << std::setw(8) << *it;
    for (int i : is) {
      int d = h.at(i, *it + 2 * i);
      std::cout << std::setw(5) << (d ? std::to_string(d) : ".");
    }
    std::cout << '\n';
  }
  std::cout << "total rank " << h.total_rank() << '\n';
}

const char* verdict_header =
    "braid                                    sl     s  sigma   det  rank  thin  collapse  psi      verdict";

std::string verdict_row(const VerdictReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(38) << to_string(r.braid) << std::right << std::setw(5) << r.sl
      << std::setw(6) << opt_str(r.s) << std::setw(7) << opt_str(r.sigma) << std::setw(6)
      << opt_str(r.det) << std::setw(6) << opt_str(r.kh_rank) << std::setw(6)
      << (r.thin ? "yes" : "no") << std::setw(10) << (r.collapse ? "yes" : "no") << "  "
      << std::left << std::setw(9) << (r.psi_nonzero ? "nonzero" : "zero") << to_string(r.verdict);
  return out.str();
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int a = std::stoi(text.substr(0, dots)), b = std::stoi(text.substr(dots + 2));
    if (b < a) throw MathError("empty range " + text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw MathError("bad range '" + text + "' (expected a..b)");
  }
}

BuildLimits limits() {
  try {
    return BuildLimits::from_environment();
  } catch (const std::logic_error&) {
    throw MathError("KHTIGHT_MAX_GENERATORS / KHTIGHT_MAX_CROSSINGS must be integers");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov-homology tightness certificates for branched double covers of transverse braids"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  BraidArgs b;

  auto* kh = app.add_subcommand("kh", "F2 Khovanov homology table");
  add_braid(kh, b);
  bool unreduced = false, bar_natan = false, dump_complex = false;
  kh->add_flag("--unreduced", unreduced, "unreduced homology");
  kh->add_flag("--bar-natan", bar_natan, "filtration levels of the Bar-Natan-Turner homology");
  kh->add_flag("--dump", dump_complex, "print the chain complex instead");

  auto* psi = app.add_subcommand("psi", "decide whether psi vanishes");
  add_braid(psi, b);
  std::string psi_method = "cancel";
  psi->add_option("--method", psi_method, "cancel or solve")->check(CLI::IsMember({"cancel", "solve"}));

  auto* s = app.add_subcommand("s", "s-invariant of a knot closure");
  add_braid(s, b);
  auto* sig = app.add_subcommand("sig", "signature");
  add_braid(sig, b);
  auto* det = app.add_subcommand("det", "determinant");
  add_braid(det, b);
  std::string coloring = "even";
  det->add_option("--coloring", coloring, "checkerboard class: even or odd")
      ->check(CLI::IsMember({"even", "odd"}));

  auto* verdict = app.add_subcommand("verdict", "full tightness report");
  add_braid(verdict, b);
  bool no_s = false;
  verdict->add_flag("--no-s", no_s, "skip the s-invariant");

  auto* qa = app.add_subcommand("qa", "quasi-alternating certificate");
  add_braid(qa, b);
  std::string strategy = "last-negative";
  qa->add_option("--strategy", strategy, "last-negative or search")
      ->check(CLI::IsMember({"last-negative", "search"}));

  auto* d3cmd = app.add_subcommand("d3", "d3 of the contact surgery diagram");
  add_braid(d3cmd, b, false);
  std::string diagram_file;
  bool no_stabilize = false, show_diagram = false;
  d3cmd->add_option("--diagram", diagram_file, "surgery diagram JSON file");
  d3cmd->add_flag("--no-stabilize", no_stabilize, "keep even strand counts");
  d3cmd->add_flag("--show-diagram", show_diagram, "print the generated diagram");

  auto* lat = app.add_subcommand("lattice", "embeddings into <-1>^n and the parity obstruction");
  std::string example, gram_file;
  int n = 0;
  long long k = 0;
  lat->add_option("--example", example, "e125 or e141")->check(CLI::IsMember({"e125", "e141"}));
  lat->add_option("--gram", gram_file, "Gram matrix file (JSON or CSV)");
  lat->add_option("--n", n, "ambient rank")->required();
  lat->add_option("--k", k, "index bound for the parity test (default |det|)");

  auto* ss = app.add_subcommand("ss", "spectral sequence pages of a bi-filtered complex");
  std::string ss_file, filtration = "I";
  int r_max = 4, random_size = 0;
  std::uint64_t seed = 1;
  bool reduce = false;
  ss->add_option("--file", ss_file, "complex file");
  ss->add_option("--filtration", filtration, "I or A")->check(CLI::IsMember({"I", "A"}));
  ss->add_option("--r-max", r_max, "last page");
  ss->add_flag("--reduce", reduce, "cancel equal-bidegree arrows first");
  ss->add_option("--random", random_size, "use a random complex with up to this many generators");
  ss->add_option("--seed", seed, "random seed");

  auto* family = app.add_subcommand("family", "verdicts over a parametrized family");
  std::string templ, range;
  int jobs = 0;
  family->add_option("--template", templ, "template such as \"-1*{r},2,1,1,1,2\"")->required();
  family->add_option("--r", range, "parameter range a..b")->required();
  family->add_option("--jobs", jobs, "worker threads (default: hardware)");

  for (auto* cmd : {kh, psi, s, sig, det, verdict, qa, d3cmd, lat, ss, family})
    cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (kh->parsed()) {
      auto w = b.word();
      auto d = closure_diagram(w);
      auto flavor = bar_natan ? Flavor::bar_natan : Flavor::khovanov;
      auto red = unreduced ? Reduction::unreduced : Reduction::reduced;
      auto c = build_complex(d, flavor, red, limits());
      if (dump_complex) {
        std::cout << dump(c.complex);
      } else if (bar_natan) {
        auto levels = filtered_levels(c.complex);
        if (as_json) {
          json a = json::array();
          for (const auto& f : levels) a.push_back({{"i", f.i}, {"level", f.level}});
          std::cout << json{{"braid", to_string(w)}, {"classes", a}}.dump() << '\n';
        } else {
          for (const auto& f : levels) std::cout << "i=" << f.i << " level=" << f.level << '\n';
        }
      } else {
        auto h = generator_table(scan_reduce(c.complex).reduced);
        if (as_json)
          std::cout << to_json(h) << '\n';
        else
          print_table(h);
      }
    } else if (psi->parsed()) {
      auto w = b.word();
      auto method = psi_method == "solve" ? PsiMethod::direct_solve : PsiMethod::cancellation;
      auto r = psi_nonvanishing(w, method, limits());
      json j{{"braid", to_string(w)},
             {"psi_nonzero", r.nonzero},
             {"i", r.grading.i},
             {"q", r.grading.q},
             {"a", r.grading.a},
             {"sl", self_linking(w)},
             {"generators", r.generators}};
      if (!r.nonzero) {
        // Witness: a chain whose boundary is psi.
        auto c = build_complex(closure_diagram(w), Flavor::khovanov, Reduction::reduced, limits());
        auto chain = locate(c, psi_chain(w, Reduction::reduced));
        auto bnd = is_boundary(c.complex, chain);
        json terms = json::array();
        for (auto g : bnd.witness)
          terms.push_back({{"state", c.complex.states[g]}, {"labels", c.labels[g]}});
        j["witness"] = terms;
      }
      if (as_json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "psi " << (r.nonzero ? "nonzero" : "zero") << " at (i,q)=(" << r.grading.i
                  << "," << r.grading.q << "), sl=" << self_linking(w) << '\n';
        if (j.contains("witness"))
          std::cout << "psi = d(y) with y a sum of " << j["witness"].size() << " generators\n";
      }
    } else if (s->parsed()) {
      auto w = b.word();
      int v = s_invariant(w, limits());
      if (as_json)
        std::cout << json{{"braid", to_string(w)}, {"s", v}}.dump() << '\n';
      else
        std::cout << v << '\n';
    } else if (sig->parsed()) {
      auto w = b.word();
      int v = signature(closure_diagram(w));
      if (as_json)
        std::cout << json{{"braid", to_string(w)}, {"signature", v}}.dump() << '\n';
      else
        std::cout << v << '\n';
    } else if (det->parsed()) {
      auto w = b.word();
      auto g = goeritz(closure_diagram(w), coloring == "odd" ? Coloring::odd_levels : Coloring::even_levels);
      mpz_class v = abs(determinant_of(g.matrix));
      if (as_json)
        std::cout << json{{"braid", to_string(w)}, {"determinant", v.get_si()}}.dump() << '\n';
      else
        std::cout << v.get_str() << '\n';
    } else if (verdict->parsed()) {
      VerdictOptions o;
      o.limits = limits();
      o.compute_s = !no_s;
      auto r = tightness_verdict(b.word(), o);
      if (as_json) {
        std::cout << to_json(r) << '\n';
      } else {
        std::cout << verdict_header << '\n' << verdict_row(r) << '\n';
        for (const auto& [field, note] : r.notes) std::cout << "  " << field << ": " << note << '\n';
      }
    } else if (qa->parsed()) {
      auto c = qa_verify(b.word(), strategy == "search" ? WitnessStrategy::search
                                                         : WitnessStrategy::last_negative_sigma1);
      if (as_json) {
        std::cout << to_json(c) << '\n';
      } else {
        std::function<void(const QANode&, int)> show = [&](const QANode& node, int depth) {
          std::cout << std::string(2 * depth, ' ') << (node.link.empty() ? "(empty)" : node.link)
                    << "  det=" << node.det;
          if (node.is_leaf()) std::cout << "  [" << node.leaf << "]";
          std::cout << '\n';
          for (const auto& ch : node.children) show(ch, depth + 1);
        };
        show(c.root, 0);
        std::cout << "depth " << c.root.depth() << '\n';
      }
    } else if (d3cmd->parsed()) {
      SurgeryDiagram diagram;
      if (!diagram_file.empty()) {
        diagram = surgery_from_json(read_file(diagram_file));
      } else if (!b.braid.empty()) {
        SurgeryOptions o;
        o.stabilize_even = !no_stabilize;
        diagram = braid_to_surgery(b.word(), o);
      } else {
        throw MathError("d3 needs --braid or --diagram");
      }
      auto r = d3(diagram);
      if (as_json) {
        auto j = json::parse(to_json(r));
        if (show_diagram) j["diagram"] = json::parse(to_json(diagram));
        std::cout << j.dump() << '\n';
      } else {
        if (show_diagram) std::cout << to_json(diagram, 2) << '\n';
        std::cout << "d3 = " << to_string(r.d3) << "  (c1^2 = " << to_string(r.c1_sq)
                  << ", chi = " << r.chi << ", sign = " << r.sign << ", m = " << r.m
                  << ", |H1| = " << r.h1_order << ")\n";
      }
    } else if (lat->parsed()) {
      GramLattice g;
      if (example == "e125")
        g = plumbing_e125();
      else if (example == "e141")
        g = plumbing_e141();
      else if (!gram_file.empty())
        g = gram_from_text(read_file(gram_file));
      else
        throw MathError("lattice needs --example or --gram");
      auto embeddings = enumerate_embeddings(g, n);
      long long index = k ? k : mpz_class(abs(determinant_of(g.gram))).get_si();
      json out{{"lattice", json::parse(to_json(g))},
               {"n", n},
               {"classes", embeddings.size()},
               {"embeddings", json::parse(to_json(embeddings))}};
      json comps = json::array();
      for (const auto& e : embeddings) {
        auto c = orthogonal_complement(e);
        json cj = json::parse(to_json(c));
        if (c.diagonal) cj["parity"] = json::parse(to_json(parity_obstruction(c.lattice, index)));
        comps.push_back(cj);
      }
      out["complements"] = comps;
      out["k"] = index;
      if (as_json) {
        std::cout << out.dump() << '\n';
      } else {
        std::cout << embeddings.size() << " embedding class(es) into <-1>^" << n << '\n';
        for (std::size_t e = 0; e < embeddings.size(); ++e) {
          for (std::size_t v = 0; v < embeddings[e].vectors.size(); ++v) {
            std::cout << "  " << g.labels[v] << " ->";
            const auto& x = embeddings[e].vectors[v];
            for (std::size_t c = 0; c < x.size(); ++c)
              if (x[c]) std::cout << ' ' << (x[c] > 0 ? "+" : "") << x[c] << "e" << c + 1;
            std::cout << '\n';
          }
          auto c = orthogonal_complement(embeddings[e]);
          std::cout << "  complement:";
          if (c.diagonal)
            for (auto d : c.diagonal_entries) std::cout << " <" << d << ">";
          else
            std::cout << " non-diagonal Gram " << to_json(c.lattice);
          std::cout << '\n';
          if (c.diagonal) {
            auto p = parity_obstruction(c.lattice, index);
            std::cout << "  parity (k=" << index << "): "
                      << (p.obstructed ? "obstructed; a filling with c1 = 0 has b2 = 0, so d3 = 0"
                                       : "not obstructed")
                      << '\n';
          }
        }
      }
    } else if (ss->parsed()) {
      BiFilteredComplex c;
      if (random_size > 0) {
        std::mt19937_64 rng(seed);
        c = random_bifiltered(rng, random_size);
      } else if (!ss_file.empty()) {
        c = parse_bifiltered(read_file(ss_file));
      } else {
        throw MathError("ss needs --file or --random");
      }
      if (reduce) c = cancel_reduce(c);
      auto report = pages(c, filtration == "A" ? Filtration::A : Filtration::I, r_max);
      if (as_json) {
        std::cout << to_json(report) << '\n';
      } else {
        std::cout << c.size() << " generators, " << to_string(report.which) << "-filtration\n";
        for (const auto& page : report.pages) {
          std::cout << "E" << page.r << " (" << page.total() << "):";
          for (const auto& [deg, dim] : page.dims) {
            std::cout << "  [" << filtration << "=" << deg << "] " << dim << " at "
                      << (report.which == Filtration::I ? "A" : "I") << " {";
            const auto& lv = page.other_levels.at(deg);
            for (std::size_t t = 0; t < lv.size(); ++t) std::cout << (t ? "," : "") << lv[t];
            std::cout << "}";
            if (auto it = page.differential_rank.find(deg); it != page.differential_rank.end())
              std::cout << " d" << page.r << " rank " << it->second;
          }
          std::cout << '\n';
        }
        std::cout << "H: rank " << report.homology_rank << ", A-levels {";
        for (std::size_t t = 0; t < report.homology_A_levels.size(); ++t)
          std::cout << (t ? "," : "") << report.homology_A_levels[t];
        std::cout << "}\n";
      }
    } else if (family->parsed()) {
      auto [lo, hi] = parse_range(range);
      std::vector<BraidWord> words;
      for (int r = lo; r <= hi; ++r) words.push_back(parse_braid(expand_template(templ, r)));
      VerdictOptions o;
      o.limits = limits();
      const unsigned workers =
          jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
      std::vector<std::string> out(words.size());
      std::atomic<std::size_t> next{0};
      auto work = [&] {
        for (std::size_t i = next++; i < words.size(); i = next++) {
          auto r = tightness_verdict(words[i], o);
          out[i] = as_json ? to_json(r) : verdict_row(r);
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(workers, words.size()); ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
      if (as_json) {
        json a = json::array();
        for (const auto& text : out) a.push_back(json::parse(text));
        std::cout << a.dump() << '\n';
      } else {
        std::cout << "r   " << verdict_header << '\n';
        for (std::size_t i = 0; i < out.size(); ++i)
          std::cout << std::left << std::setw(4) << lo + static_cast<int>(i) << out[i] << '\n';
      }
    }
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
