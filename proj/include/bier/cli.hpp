#pragma once

// Command-line front end.  Every command reads JSON (inline, from a file, or
// from standard input via "-") and writes a single JSON document to standard
// output.  Success prints the payload and exits 0; failures print
// {"status":"error","code":...,"message":...} and exit 1.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bier/chessboard.hpp"
#include "bier/homology.hpp"
#include "bier/json_io.hpp"
#include "bier/morse.hpp"
#include "bier/sampling.hpp"

namespace bier {

namespace cli_detail {

inline json load_json(const std::string& arg, std::istream& in) {
  std::string text;
  if (arg == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream f(arg);
    if (!f) throw std::invalid_argument("cannot open input file: " + arg);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return json::parse(text);
}

inline json cells_json(const std::vector<PartitionSimplex>& cells, std::size_t limit) {
  json arr = json::array();
  for (std::size_t i = 0; i < cells.size() && i < limit; ++i) arr.push_back(cell_to_json(cells[i]));
  return arr;
}

inline json histogram_json(const std::map<int, std::size_t>& h) {
  json out = json::object();
  for (auto [d, c] : h) out[std::to_string(d)] = c;
  return out;
}

inline json field_summary(const DiscreteVectorField& field, std::size_t limit) {
  std::size_t pairs = 0;
  for (const auto& e : field.entries)
    if (e.status == MatchStatus::MatchedUp) ++pairs;
  CriticalReport crit = critical_cells(field);
  json out{{"kind", field.kind},
           {"cells", field.cells.size()},
           {"pairs", pairs},
           {"critical", crit.cells.size()},
           {"critical_by_dimension", histogram_json(crit.by_dimension)}};
  out["critical_cells"] = cells_json(crit.cells, limit);
  return out;
}

inline DiscreteVectorField make_field(const std::string& kind, const std::string& tuple_arg,
                                      const std::string& complex_arg, std::istream& in) {
  if (kind == "d") {
    if (tuple_arg.empty()) throw std::invalid_argument("--field d requires --tuple");
    return build_dmf(tuple_from_json(load_json(tuple_arg, in)));
  }
  if (complex_arg.empty()) throw std::invalid_argument("--field " + kind + " requires --complex");
  SimplicialComplex k = complex_from_json(load_json(complex_arg, in));
  return kind == "d1" ? bier_dmf_d1(k) : bier_dmf_d2(k);
}

}  // namespace cli_detail

// Runs one CLI invocation.  `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr, std::istream& in = std::cin) {
  using cli_detail::load_json;

  CLI::App app{"computations with Alexander r-tuples, deleted joins, and their discrete Morse fields"};
  app.require_subcommand(1);
  std::size_t list_limit = 100;
  app.add_option("--list-limit", list_limit, "cap emitted cell lists (counts stay exact)");

  std::string tuple_arg, complex_arg, spec_arg, field_kind = "d", direct_mode = "auto";
  bool direct = false;
  int opt_n = 0, opt_r = 2;
  std::uint64_t seed = 0;

  auto add_tuple = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--tuple", tuple_arg, "tuple JSON (inline, file path, or - for stdin)");
    if (required) o->required();
  };
  auto add_complex = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--complex", complex_arg, "complex JSON (inline, file path, or - for stdin)");
    if (required) o->required();
  };
  auto add_spec = [&](CLI::App* c) {
    c->add_option("--spec", spec_arg, "chessboard spec JSON {\"n\",\"r\",\"m\"}")->required();
  };

  auto* cmd_dual = app.add_subcommand("dual", "Alexander dual of a complex");
  add_complex(cmd_dual);
  auto* cmd_dj = app.add_subcommand("deleted-join", "cells of the deleted join of a tuple");
  add_tuple(cmd_dj);
  auto* cmd_res = app.add_subcommand("residual", "residual complex of an (r-1)-tuple");
  add_tuple(cmd_res);
  auto* cmd_unav = app.add_subcommand("check-unavoidable", "collective r-unavoidability with witness");
  add_tuple(cmd_unav);
  auto* cmd_alex = app.add_subcommand("check-alexander", "Alexander r-tuple test");
  add_tuple(cmd_alex);
  auto* cmd_min = app.add_subcommand("check-minimal", "minimality of a collectively unavoidable tuple");
  add_tuple(cmd_min);
  auto* cmd_cls = app.add_subcommand("classify", "structural classification of an Alexander tuple");
  add_tuple(cmd_cls);

  auto* cmd_morse = app.add_subcommand("morse", "discrete Morse fields on deleted joins");
  cmd_morse->require_subcommand(1);
  auto* morse_build = cmd_morse->add_subcommand("build", "build a field and summarize it");
  auto* morse_verify = cmd_morse->add_subcommand("verify", "validity/acyclicity report for a field");
  auto* morse_crit = cmd_morse->add_subcommand("critical", "critical cells of a field");
  for (auto* c : {morse_build, morse_verify, morse_crit}) {
    add_tuple(c, false);
    add_complex(c, false);
    c->add_option("--field", field_kind, "d (generic, needs --tuple) | d1 | d2 (Bier, need --complex)")
        ->check(CLI::IsMember({"d", "d1", "d2"}));
  }
  morse_crit->add_flag("--direct", direct, "use the closed-form critical criteria instead of the field");
  morse_crit->add_option("--mode", direct_mode, "direct criteria mode")
      ->check(CLI::IsMember({"auto", "alexander", "long"}));

  auto* cmd_betti = app.add_subcommand("betti", "reduced mod-2 Betti numbers");
  add_complex(cmd_betti);

  auto* cmd_chess = app.add_subcommand("chessboard", "multiple chessboard complexes");
  cmd_chess->require_subcommand(1);
  auto* chess_build = cmd_chess->add_subcommand("build", "the tuple of skeleta");
  auto* chess_opt = cmd_chess->add_subcommand("count-optimal", "closed-form critical count, optimal case");
  auto* chess_long = cmd_chess->add_subcommand("count-long", "closed-form critical count, long case");
  auto* chess_wedge = cmd_chess->add_subcommand("wedge", "wedge-of-spheres summary");
  for (auto* c : {chess_build, chess_opt, chess_long, chess_wedge}) add_spec(c);

  auto* cmd_bier = app.add_subcommand("bier", "Bier complex of an Alexander tuple");
  add_tuple(cmd_bier);

  auto* cmd_sample = app.add_subcommand("sample-unavoidable", "random collectively unavoidable tuple");
  cmd_sample->add_option("--n", opt_n, "ground-set size")->required();
  cmd_sample->add_option("--r", opt_r, "tuple arity (2 or 3)");
  cmd_sample->add_option("--seed", seed, "RNG seed");

  // let --list-limit (declared on the app) be given after a subcommand too
  auto set_fallthrough = [](auto&& self, CLI::App* a) -> void {
    for (CLI::App* sc : a->get_subcommands([](const CLI::App*) { return true; })) {
      sc->fallthrough();
      self(self, sc);
    }
  };
  set_fallthrough(set_fallthrough, &app);

  auto fail = [&](const std::string& code, const std::string& message) {
    out << json{{"status", "error"}, {"code", code}, {"message", message}}.dump() << "\n";
    return 1;
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    err << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail("bad_arguments", e.what());
  }

  try {
    json payload;
    if (*cmd_dual) {
      payload = complex_to_json(alexander_dual(complex_from_json(load_json(complex_arg, in))));
    } else if (*cmd_dj) {
      ComplexTuple t = tuple_from_json(load_json(tuple_arg, in));
      auto cells = deleted_join_cells(t);
      int top = -1;
      for (const auto& c : cells) top = std::max(top, c.dim());
      payload = json{{"n", t.n()},
                     {"r", t.r()},
                     {"dimension", top},
                     {"cell_count", cells.size()},
                     {"f_vector", f_vector(cells)},
                     {"euler", euler_characteristic(cells)},
                     {"cells", cli_detail::cells_json(cells, list_limit)}};
    } else if (*cmd_res) {
      auto [n, ks] = members_from_json(load_json(tuple_arg, in));
      payload = complex_to_json(residual_complex(ks, int(ks.size()) + 1));
    } else if (*cmd_unav) {
      ComplexTuple t = tuple_from_json(load_json(tuple_arg, in));
      auto res = is_collectively_unavoidable(t);
      payload = json{{"unavoidable", res.unavoidable}};
      if (res.witness) {
        json blocks = json::array();
        Simplex covered;
        for (Simplex b : res.witness->blocks) {
          blocks.push_back(simplex_to_json(b));
          covered = covered | b;
        }
        payload["witness"] = json{{"parts", blocks},
                                  {"rest", simplex_to_json(complement(covered, t.n()))}};
      }
    } else if (*cmd_alex) {
      ComplexTuple t = tuple_from_json(load_json(tuple_arg, in));
      auto res = is_alexander_tuple(t);
      payload = json{{"alexander", res.alexander}};
      if (res.unavoidability_witness) {
        json blocks = json::array();
        for (Simplex b : res.unavoidability_witness->blocks) blocks.push_back(simplex_to_json(b));
        payload["unavoidability_witness"] = blocks;
      }
      if (res.covering_violation) {
        json blocks = json::array();
        for (Simplex b : *res.covering_violation) blocks.push_back(simplex_to_json(b));
        payload["covering_violation"] = blocks;
      }
    } else if (*cmd_min) {
      ComplexTuple t = tuple_from_json(load_json(tuple_arg, in));
      payload = json{{"minimal", is_minimal_unavoidable(t)}};
    } else if (*cmd_cls) {
      ComplexTuple t = tuple_from_json(load_json(tuple_arg, in));
      auto cls = classify_alexander_tuple(t);
      const char* names[] = {"dual_pair", "pure_skeleton", "skeleton_join_simplex", "not_alexander"};
      payload = json{{"kind", names[int(cls.kind)]}};
      if (cls.kind == AlexanderKind::PureSkeleton || cls.kind == AlexanderKind::SkeletonJoinSimplex)
        payload["m"] = cls.m;
      if (cls.kind == AlexanderKind::SkeletonJoinSimplex)
        payload["cone"] = simplex_to_json(cls.cone);
    } else if (*cmd_morse) {
      if (*morse_crit && direct) {
        ComplexTuple t = tuple_from_json(load_json(tuple_arg, in));
        DirectMode mode;
        if (direct_mode == "alexander") {
          mode = DirectMode::Alexander;
        } else if (direct_mode == "long") {
          mode = DirectMode::LongChessboard;
        } else {
          mode = is_alexander_tuple(t).alexander ? DirectMode::Alexander : DirectMode::LongChessboard;
        }
        CriticalReport rep = critical_cells_direct(t, mode);
        payload = json{{"count", rep.cells.size()},
                       {"by_dimension", cli_detail::histogram_json(rep.by_dimension)},
                       {"cells", cli_detail::cells_json(rep.cells, list_limit)}};
      } else {
        DiscreteVectorField field = cli_detail::make_field(field_kind, tuple_arg, complex_arg, in);
        if (*morse_build) {
          payload = cli_detail::field_summary(field, list_limit);
        } else if (*morse_verify) {
          VerifyReport rep = verify_dmf(field);
          payload = json{{"valid", rep.valid}, {"issues", rep.issues}};
        } else {
          CriticalReport rep = critical_cells(field);
          payload = json{{"count", rep.cells.size()},
                         {"by_dimension", cli_detail::histogram_json(rep.by_dimension)},
                         {"cells", cli_detail::cells_json(rep.cells, list_limit)}};
        }
      }
    } else if (*cmd_betti) {
      SimplicialComplex k = complex_from_json(load_json(complex_arg, in));
      BettiProfile p = betti_mod2(k);
      int conn = -1;
      for (std::size_t i = 0; i < p.reduced.size() && p.reduced[i] == 0; ++i) conn = int(i);
      payload = json{{"reduced", p.reduced}, {"euler", p.euler}, {"connectivity", conn}};
    } else if (*cmd_chess) {
      ChessboardSpec spec = spec_from_json(load_json(spec_arg, in));
      if (*chess_build) {
        payload = tuple_to_json(build_chessboard(spec));
      } else if (*chess_opt) {
        payload = json{{"count", count_critical_optimal(spec)}};
      } else if (*chess_long) {
        payload = json{{"count", count_critical_long(spec)}};
      } else {
        WedgeSummary w = wedge_summary(spec);
        payload = json{{"dimension", w.dimension},
                       {"count", w.count},
                       {"homology_checked", w.homology_checked}};
      }
    } else if (*cmd_bier) {
      ComplexTuple t = tuple_from_json(load_json(tuple_arg, in));
      BierComplexResult res = bier_complex(t);
      int top = -1;
      for (const auto& c : res.cells) top = std::max(top, c.dim());
      payload = json{{"n", t.n()},
                     {"r", t.r()},
                     {"dimension", top},
                     {"cell_count", res.cells.size()},
                     {"f_vector", f_vector(res.cells)},
                     {"euler", euler_characteristic(res.cells)},
                     {"cells", cli_detail::cells_json(res.cells, list_limit)}};
    } else if (*cmd_sample) {
      payload = tuple_to_json(sample_unavoidable(opt_n, opt_r, seed));
    }
    out << payload.dump() << "\n";
    return 0;
  } catch (const json::parse_error& e) {
    return fail("parse_error", e.what());
  } catch (const std::invalid_argument& e) {
    return fail("precondition_failed", e.what());
  } catch (const std::runtime_error& e) {
    return fail("budget_exceeded", e.what());
  } catch (const std::logic_error& e) {
    return fail("internal_error", e.what());
  }
}

}  // namespace bier
