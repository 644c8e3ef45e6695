// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 usage/input error.
#pragma once

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "siltlab/verify.hpp"

namespace siltlab {

namespace cli_detail {

inline std::vector<long long> parse_csv(const std::string& s) {
  std::vector<long long> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoll(tok));
  }
  return out;
}

inline SiltingCandidate parse_object(const DerivedCategory& dc, const std::string& labels,
                                     const std::string& object_json) {
  if (!labels.empty()) {
    if (dc.n() != 2)
      throw std::invalid_argument("--labels only applies to A_2; use --object for other quivers");
    std::vector<DerivedObject> xs;
    for (long long l : parse_csv(labels)) xs.push_back(dc.a2_object(l));
    return SiltingCandidate(std::move(xs));
  }
  if (!object_json.empty()) {
    json j = json::parse(object_json);
    std::vector<DerivedObject> xs;
    for (const auto& e : j) xs.push_back(derived_from_json(e));
    return SiltingCandidate(std::move(xs));
  }
  throw std::invalid_argument("need --labels (A_2) or --object (JSON array of summands)");
}

inline OrbitFunctor parse_functor(const std::string& s) {
  if (s.rfind("nu", 0) == 0) return OrbitFunctor::nu_d(std::stoi(s.substr(2)));
  if (s.rfind("root", 0) == 0) return OrbitFunctor::a2_root(std::stoi(s.substr(4)));
  if (s.rfind("comp:", 0) == 0) {
    std::vector<long long> pq = parse_csv(s.substr(5));
    if (pq.size() != 2) throw std::invalid_argument("composite functor needs comp:<p>,<q>");
    return OrbitFunctor::composite((int)pq[0], (int)pq[1]);
  }
  throw std::invalid_argument("unknown functor (want nu<d>, root<d> or comp:<p>,<q>): " + s);
}

inline void print_report(const VerifyReport& rep, bool as_json, std::ostream& out,
                         std::ostream& err) {
  if (as_json) {
    out << to_json(rep).dump(2) << "\n";
  } else {
    for (const Claim& c : rep.claims) {
      out << (c.status == "pass" ? "[pass] " : c.status == "fail" ? "[FAIL] " : "[skip] ")
          << c.id << ": " << c.anchor;
      if (!c.witness.empty()) out << "  (" << c.witness << ")";
      out << "\n";
    }
    out << (rep.passed() ? "suite passed" : "suite FAILED") << " (" << rep.claims.size()
        << " claims)\n";
  }
  err << "# " << rep.suite << " wall time: " << rep.wall_ms << " ms\n";
}

}  // namespace cli_detail

inline int cli_main(std::vector<std::string> args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"silt-lab: silting objects, braid encodings and orbit-category models "
               "for type-A quivers"};
  app.require_subcommand(1);

  std::string quiver = "a2", labels, object_json, summand, dir = "left", functor = "nu2";
  std::string word, diagram = "a2", suite, offsets;
  int nsteps = 1, dparam = 2, depth = 16, folded_d = 3, jobs = 1;
  unsigned long long seed = 0;
  bool as_json = false, as_dot = false;

  auto* ar = app.add_subcommand("ar-quiver", "print the AR quiver of mod kQ");
  ar->add_option("--quiver", quiver);
  ar->add_flag("--dot", as_dot);
  ar->add_flag("--json", as_json);

  auto* si = app.add_subcommand("silt-interval", "enumerate the silting interval [A[n], A]");
  si->add_option("--quiver", quiver);
  si->add_option("--n", nsteps);
  si->add_flag("--json", as_json);

  auto* ha = app.add_subcommand("hasse", "Hasse quiver of the silting interval [A[n], A]");
  ha->add_option("--quiver", quiver);
  ha->add_option("--n", nsteps);
  ha->add_flag("--json", as_json);
  ha->add_flag("--dot", as_dot);

  auto* ds = app.add_subcommand("d-silting", "test whether an object is d-silting");
  ds->add_option("--quiver", quiver);
  ds->add_option("--d", dparam);
  ds->add_option("--labels", labels);
  ds->add_option("--object", object_json);

  auto* mu = app.add_subcommand("mutate", "mutate a silting object at one summand");
  mu->add_option("--quiver", quiver);
  mu->add_option("--labels", labels);
  mu->add_option("--object", object_json);
  mu->add_option("--summand", summand)->required();
  mu->add_option("--dir", dir)->check(CLI::IsMember({"left", "right"}));
  mu->add_flag("--json", as_json);

  auto* be = app.add_subcommand("braid-encode", "braid image F(S) of a section");
  be->add_option("--quiver", quiver);
  be->add_option("--offsets", offsets)->required();
  be->add_option("--depth", depth);

  auto* bn = app.add_subcommand("braid-nf", "Garside normal form of a braid word");
  bn->add_option("word", word)->required();
  bn->add_option("--diagram", diagram);

  auto* ct = app.add_subcommand("ctilt", "cluster-tilting objects of an orbit model");
  ct->add_option("--quiver", quiver);
  ct->add_option("--functor", functor);
  ct->add_option("--d", dparam);
  ct->add_flag("--json", as_json);
  ct->add_flag("--dot", as_dot);

  auto* am = app.add_subcommand("amiot-check", "fundamental-domain vs cluster-tilting bijection");
  am->add_option("--quiver", quiver);
  am->add_option("--d", dparam);

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", suite)->required();
  ve->add_option("--seed", seed);
  ve->add_option("--d", folded_d);
  ve->add_option("--jobs", jobs);  // suites run sequentially; accepted for compatibility
  ve->add_flag("--json", as_json);

  std::vector<const char*> argv;
  std::string prog = "silt-lab";
  argv.push_back(prog.c_str());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help() << "\n";
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*ar) {
      DerivedCategory dc(parse_quiver(quiver));
      if (as_dot) {
        out << dot_ar_quiver(dc.modules());
      } else if (as_json) {
        json j;
        j["vertices"] = json::array();
        for (const IntervalModule& m : dc.modules().ar().vertices)
          j["vertices"].push_back(to_json(m));
        j["arrows"] = json::array();
        for (const auto& [a, b] : dc.modules().ar().arrows)
          j["arrows"].push_back(json::array({to_json(a), to_json(b)}));
        j["translate"] = json::array();
        for (const auto& [znext, z] : dc.modules().ar().translate)
          j["translate"].push_back(json::array({to_json(znext), to_json(z)}));
        out << j.dump(2) << "\n";
      } else {
        for (const auto& [a, b] : dc.modules().ar().arrows)
          out << "[" << a.lo << "," << a.hi << "] -> [" << b.lo << "," << b.hi << "]\n";
        for (const auto& [znext, z] : dc.modules().ar().translate)
          out << "tau [" << znext.lo << "," << znext.hi << "] = [" << z.lo << "," << z.hi
              << "]\n";
      }
    } else if (*si) {
      DerivedCategory dc(parse_quiver(quiver));
      SiltingCandidate a = detail::projective_slice(dc);
      std::vector<SiltingCandidate> xs = enumerate_interval(dc, a, nsteps);
      if (as_json) {
        json j = json::array();
        for (const SiltingCandidate& p : xs) j.push_back(to_json(dc, p));
        out << j.dump(2) << "\n";
      } else {
        for (const SiltingCandidate& p : xs) out << silting_label(dc, p) << "\n";
        out << "total: " << xs.size() << "\n";
      }
    } else if (*ha) {
      DerivedCategory dc(parse_quiver(quiver));
      SiltingCandidate a = detail::projective_slice(dc);
      HasseQuiver h = hasse(dc, enumerate_interval(dc, a, nsteps));
      if (as_dot)
        out << dot_hasse(dc, h);
      else
        out << to_json(dc, h).dump(2) << "\n";
    } else if (*ds) {
      DerivedCategory dc(parse_quiver(quiver));
      SiltingCandidate p = parse_object(dc, labels, object_json);
      bool res = is_d_silting(dc, p, dparam);
      out << (res ? "true" : "false") << "\n";
    } else if (*mu) {
      DerivedCategory dc(parse_quiver(quiver));
      SiltingCandidate t = parse_object(dc, labels, object_json);
      DerivedObject x;
      if (!labels.empty())
        x = dc.a2_object(std::stoll(summand));
      else
        x = derived_from_json(json::parse(summand));
      SiltingCandidate r =
          mutate(dc, t, x, dir == "left" ? MutationDir::Left : MutationDir::Right);
      if (as_json)
        out << to_json(dc, r).dump(2) << "\n";
      else
        out << silting_label(dc, r) << "\n";
    } else if (*be) {
      DerivedCategory dc(parse_quiver(quiver));
      BraidGroup bg(dc.n());
      std::vector<long long> offs = parse_csv(offsets);
      Section s;
      for (long long v : offs) s.offsets.push_back((int)v);
      BraidElement e = section_to_braid(dc, bg, s, depth);
      out << bg.to_string(e) << "\n";
    } else if (*bn) {
      QuiverA q = parse_quiver(diagram);
      BraidGroup bg(q.n);
      out << bg.to_string(bg.normal_form(parse_braid_word(word))) << "\n";
    } else if (*ct) {
      DerivedCategory dc(parse_quiver(quiver));
      OrbitFunctor f = parse_functor(functor);
      OrbitCategory c(dc, f);
      int d = f.kind == OrbitFunctor::Kind::NuD ? f.d
              : f.kind == OrbitFunctor::Kind::A2Root ? 2 * f.d + 1
                                                     : dparam;
      auto cts = enumerate_ctilt(c, d);
      if (as_dot) {
        out << dot_exchange(dc, cts);
      } else if (as_json) {
        json j = json::array();
        for (const auto& u : cts) {
          json arr = json::array();
          for (const DerivedObject& x : u) arr.push_back(to_json(dc, x));
          j.push_back(arr);
        }
        out << j.dump(2) << "\n";
      } else {
        for (const auto& u : cts) {
          for (size_t i = 0; i < u.size(); ++i) out << (i ? "+" : "") << object_label(dc, u[i]);
          out << "\n";
        }
        out << "total: " << cts.size() << " (" << c.reps().size() << " indecomposables)\n";
      }
    } else if (*am) {
      DerivedCategory dc(parse_quiver(quiver));
      AmiotReport r = amiot_map_check(dc, dparam);
      out << to_json(dc, r).dump(2) << "\n";
      if (!r.bijection) return 1;
    } else if (*ve) {
      SuiteOptions opts;
      opts.seed = seed;
      opts.folded_d = folded_d;
      VerifyReport rep = run_suite(suite, opts);
      print_report(rep, as_json, out, err);
      if (!rep.passed()) return 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace siltlab
