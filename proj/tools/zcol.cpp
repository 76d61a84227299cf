// zcol: invariant queries, classification dumps, verification reports, and
// SVG export for braid closures.
//
// Exit codes: 0 success; 1 computational failure or a verification report
// that is not fully confirmed; 2 usage error (bad flags, malformed words,
// invalid parameters).

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zcol/braid.hpp"
#include "zcol/coloring.hpp"
#include "zcol/diagram.hpp"
#include "zcol/json_io.hpp"
#include "zcol/rack.hpp"
#include "zcol/svg.hpp"
#include "zcol/torus.hpp"

namespace {

using namespace zcol;

std::vector<long long> parse_csv_ints(const std::string& s, const char* what) {
  std::vector<long long> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(errc::InvalidParams, std::string(what) + ": bad integer '" + item + "'");
    }
  }
  if (out.empty()) fail(errc::InvalidParams, std::string(what) + ": empty list");
  return out;
}

// Braid input shared by most subcommands: either a positional word
// ("strands: letters...") or --torus p,q,r for the standard torus closure.
struct DiagramInput {
  std::string word_text;
  std::string torus_text;
  BraidWord word;
  std::optional<TorusParams> torus;

  void add_to(CLI::App* cmd, bool word_allowed = true) {
    if (word_allowed)
      cmd->add_option("word", word_text, "braid word, e.g. \"2: 1 1 1\"");
    cmd->add_option("--torus", torus_text,
                    "torus parameters p,q,r for the standard (q*r)-strand closure");
  }

  void validate() {
    if (word_text.empty() == torus_text.empty())
      fail(errc::InvalidParams, "give exactly one of: a braid word, --torus p,q,r");
    if (!word_text.empty()) {
      word = parse_braid(word_text);
      return;
    }
    std::vector<long long> v = parse_csv_ints(torus_text, "--torus");
    if (v.size() != 3) fail(errc::InvalidParams, "--torus needs exactly p,q,r");
    torus = torus_params(v[0], v[1], v[2]);
    word = torus_braid(torus->p * torus->r, (int)(torus->q * torus->r));
  }
};

std::string tuple_str(const std::vector<long long>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string bigvec_str(const BigVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "# " << rep.title << "\n";
  long long confirmed = 0, refuted = 0, vacuous = 0;
  for (const ReportRow& row : rep.rows) {
    switch (row.status) {
      case Status::Confirmed: ++confirmed; break;
      case Status::Refuted: ++refuted; break;
      case Status::Vacuous: ++vacuous; break;
    }
    os << '[' << status_name(row.status) << "] p=" << row.p << " q=" << row.q << " r=" << row.r
       << ' ' << row.instance << " | claimed: " << row.claimed
       << " | computed: " << row.computed;
    if (!row.witness.empty()) os << " | witness: " << row.witness;
    if (!row.notes.empty()) os << " | " << row.notes;
    os << '\n';
  }
  os << "rows=" << rep.rows.size() << " confirmed=" << confirmed << " refuted=" << refuted
     << " vacuous=" << vacuous << '\n';
  os << "hypothesis-consistent=" << (rep.hypothesis_consistent ? "yes" : "no") << '\n';
  return os.str();
}

// Renders the report in the chosen format to stdout or --out, then maps the
// verdict to an exit code.
int emit_report(const VerificationReport& rep, const std::string& format,
                const std::string& out_path) {
  std::string doc;
  if (format == "json")
    doc = report_to_json(rep);
  else if (format == "csv")
    doc = report_to_csv(rep);
  else
    doc = report_to_text(rep);
  if (out_path.empty())
    std::cout << doc;
  else
    write_text_file(out_path, doc);
  return rep.all_confirmed() && rep.hypothesis_consistent ? 0 : 1;
}

// Phase 1 (input validation) failures exit 2; phase 2 (computation) failures
// exit 1.
template <class Validate, class Compute>
void two_phase(int& exit_code, Validate validate, Compute compute) {
  try {
    validate();
  } catch (const error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    exit_code = 2;
    return;
  }
  try {
    exit_code = compute();
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    exit_code = 1;
  }
}

void add_format_options(CLI::App* cmd, std::string& format, std::string& out_path) {
  cmd->add_option("--format", format, "report format: text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_val("text");
  cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer and rack colorings of braid closures"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- det ----
  auto in_det = std::make_shared<DiagramInput>();
  CLI::App* det = app.add_subcommand("det", "determinant of the closure");
  in_det->add_to(det);
  det->callback([&, in_det] {
    two_phase(exit_code, [&] { in_det->validate(); }, [&] {
      std::cout << link_determinant(close_braid(in_det->word)) << '\n';
      return 0;
    });
  });

  // ---- colorable ----
  auto in_col = std::make_shared<DiagramInput>();
  CLI::App* colorable = app.add_subcommand("colorable", "does a nontrivial coloring exist?");
  in_col->add_to(colorable);
  colorable->callback([&, in_col] {
    two_phase(exit_code, [&] { in_col->validate(); }, [&] {
      Diagram d = close_braid(in_col->word);
      long long rank = lattice_rank(coloring_lattice(d));
      std::cout << (rank >= 2 ? "colorable" : "not-colorable") << " rank=" << rank << '\n';
      return 0;
    });
  });

  // ---- colorings ----
  auto in_cols = std::make_shared<DiagramInput>();
  CLI::App* colorings = app.add_subcommand("colorings", "basis of all arc colorings");
  in_cols->add_to(colorings);
  colorings->callback([&, in_cols] {
    two_phase(exit_code, [&] { in_cols->validate(); }, [&] {
      Diagram d = close_braid(in_cols->word);
      std::vector<BigVec> basis = coloring_lattice(d);
      std::cout << "rank=" << basis.size() << '\n';
      for (const BigVec& v : basis) std::cout << bigvec_str(v) << '\n';
      return 0;
    });
  });

  // ---- mincol ----
  auto in_min = std::make_shared<DiagramInput>();
  auto min_max = std::make_shared<int>(5);
  CLI::App* mincol = app.add_subcommand("mincol", "least palette size over nontrivial colorings");
  in_min->add_to(mincol);
  mincol->add_option("--max", *min_max, "largest palette size to scan")->default_val(5);
  mincol->callback([&, in_min, min_max] {
    two_phase(exit_code,
              [&] {
                in_min->validate();
                if (*min_max < 2) fail(errc::InvalidParams, "--max must be at least 2");
              },
              [&] {
                Diagram d = close_braid(in_min->word);
                MincolResult r = mincol_search(d, *min_max);
                if (r.mincol == 0) {
                  std::cout << "none<=" << *min_max << '\n';
                  return 0;
                }
                std::cout << "mincol=" << r.mincol << '\n';
                std::cout << "seed=" << tuple_str(r.witness_seed) << '\n';
                std::cout << "palette=" << tuple_str(r.witness_palette) << '\n';
                return 0;
              });
  });

  // ---- torus-verify ----
  auto tv_torus = std::make_shared<std::string>();
  auto tv_format = std::make_shared<std::string>();
  auto tv_out = std::make_shared<std::string>();
  CLI::App* torus_verify =
      app.add_subcommand("torus-verify", "minimal palette and lattice classification checks");
  torus_verify->add_option("--torus", *tv_torus, "torus parameters p,q,r")->required();
  add_format_options(torus_verify, *tv_format, *tv_out);
  auto tv_params = std::make_shared<std::optional<TorusParams>>();
  torus_verify->callback([&, tv_torus, tv_format, tv_out, tv_params] {
    two_phase(exit_code,
              [&] {
                std::vector<long long> v = parse_csv_ints(*tv_torus, "--torus");
                if (v.size() != 3) fail(errc::InvalidParams, "--torus needs exactly p,q,r");
                *tv_params = torus_params(v[0], v[1], v[2]);
              },
              [&] {
                VerificationReport rep = verify_minimal_palette(**tv_params);
                VerificationReport pa = verify_classification(**tv_params);
                rep.title += " + " + pa.title;
                rep.rows.insert(rep.rows.end(), pa.rows.begin(), pa.rows.end());
                rep.hypothesis_consistent =
                    rep.hypothesis_consistent && pa.hypothesis_consistent;
                return emit_report(rep, *tv_format, *tv_out);
              });
  });

  // ---- classify-a ----
  auto ca_torus = std::make_shared<std::string>();
  auto ca_lo = std::make_shared<long long>(-3);
  auto ca_hi = std::make_shared<long long>(6);
  auto ca_cap = std::make_shared<long long>(1000000);
  auto ca_enum = std::make_shared<bool>(false);
  CLI::App* classify_a =
      app.add_subcommand("classify-a", "closing left-end lattice, by parity case");
  classify_a->add_option("--torus", *ca_torus, "torus parameters p,q,r")->required();
  classify_a->add_flag("--enumerate", *ca_enum, "list every member with entries in [lo, hi]");
  classify_a->add_option("--lo", *ca_lo, "box lower bound for --enumerate")->default_val(-3);
  classify_a->add_option("--hi", *ca_hi, "box upper bound for --enumerate")->default_val(6);
  classify_a->add_option("--cap", *ca_cap, "largest member count for --enumerate")
      ->default_val(1000000);
  auto ca_params = std::make_shared<std::optional<TorusParams>>();
  classify_a->callback([&, ca_torus, ca_lo, ca_hi, ca_cap, ca_enum, ca_params] {
    two_phase(exit_code,
              [&] {
                std::vector<long long> v = parse_csv_ints(*ca_torus, "--torus");
                if (v.size() != 3) fail(errc::InvalidParams, "--torus needs exactly p,q,r");
                *ca_params = torus_params(v[0], v[1], v[2]);
                if (*ca_lo > *ca_hi) fail(errc::InvalidParams, "--lo must be <= --hi");
                if (*ca_cap < 1) fail(errc::InvalidParams, "--cap must be positive");
              },
              [&] {
                ClassificationSet cs = classification_A(**ca_params);
                std::cout << "case=" << family_case_name(cs.tag) << '\n';
                std::cout << "rank=" << cs.rank() << '\n';
                for (const BigVec& g : cs.generators)
                  std::cout << "generator=" << bigvec_str(g) << '\n';
                if (*ca_enum)
                  for (const BigVec& m : cs.enumerate_box(*ca_lo, *ca_hi, *ca_cap))
                    std::cout << "member=" << bigvec_str(m) << '\n';
                return 0;
              });
  });

  // ---- classify-a4 ----
  auto a4_r = std::make_shared<long long>(0);
  CLI::App* classify_a4 =
      app.add_subcommand("classify-a4", "four-color seed catalogue for even r");
  classify_a4->add_option("--r", *a4_r, "block length r (even)")->required();
  classify_a4->callback([&, a4_r] {
    auto catalogue = std::make_shared<FourColorSet>();
    two_phase(exit_code,
              [&] { *catalogue = classification_A4(*a4_r); },
              [&] {
                for (const Tuple& a : catalogue->tuples) std::cout << tuple_str(a) << '\n';
                return 0;
              });
  });

  // ---- parallel-verify ----
  auto pv_word = std::make_shared<std::string>();
  auto pv_n = std::make_shared<int>(0);
  auto pv_format = std::make_shared<std::string>();
  auto pv_out = std::make_shared<std::string>();
  CLI::App* parallel_verify = app.add_subcommand(
      "parallel-verify", "coloring transport between a knot and its parallel copies");
  parallel_verify->add_option("word", *pv_word, "braid word closing to a knot")->required();
  parallel_verify->add_option("--n", *pv_n, "number of parallel copies")->required();
  add_format_options(parallel_verify, *pv_format, *pv_out);
  auto pv_parsed = std::make_shared<BraidWord>();
  parallel_verify->callback([&, pv_word, pv_n, pv_format, pv_out, pv_parsed] {
    two_phase(exit_code,
              [&] {
                *pv_parsed = parse_braid(*pv_word);
                if (*pv_n < 1) fail(errc::InvalidParams, "--n must be at least 1");
                Diagram d = close_braid(*pv_parsed);
                if (d.components.size() != 1)
                  fail(errc::ComponentCountNotOne,
                       "the word closes to " + std::to_string(d.components.size()) +
                           " components; a knot is required");
              },
              [&] {
                return emit_report(verify_parallel(*pv_parsed, *pv_n), *pv_format, *pv_out);
              });
  });

  // ---- rack-color ----
  auto rc_word = std::make_shared<std::string>();
  auto rc_spec = std::make_shared<std::string>();
  auto rc_budget = std::make_shared<long long>(4000000);
  CLI::App* rack_color =
      app.add_subcommand("rack-color", "closure colorings by a finite rack");
  rack_color->add_option("word", *rc_word, "braid word")->required();
  rack_color->add_option("--rack", *rc_spec,
                         "rack spec: cyclic:k, dihedral:m, or znr:n:mod")
      ->required();
  rack_color->add_option("--budget", *rc_budget, "largest seed count to scan")
      ->default_val(4000000);
  auto rc_parsed = std::make_shared<BraidWord>();
  auto rc_rack = std::make_shared<std::optional<FiniteRack>>();
  rack_color->callback([&, rc_word, rc_spec, rc_budget, rc_parsed, rc_rack] {
    two_phase(exit_code,
              [&] {
                *rc_parsed = parse_braid(*rc_word);
                *rc_rack = FiniteRack::from_spec(parse_rack(*rc_spec));
                if (*rc_budget < 1) fail(errc::InvalidParams, "--budget must be positive");
              },
              [&] {
                const FiniteRack& r = **rc_rack;
                std::vector<std::vector<int>> found =
                    rack_colorings_of_closure(r, *rc_parsed, *rc_budget);
                std::cout << "rack=" << r.label() << '\n';
                std::cout << "count=" << found.size() << '\n';
                for (const std::vector<int>& c : found) {
                  for (size_t i = 0; i < c.size(); ++i)
                    std::cout << (i ? " " : "") << r.element_name(c[i]);
                  std::cout << '\n';
                }
                return 0;
              });
  });

  // ---- render ----
  auto in_render = std::make_shared<DiagramInput>();
  auto rd_seed = std::make_shared<std::string>();
  auto rd_out = std::make_shared<std::string>();
  CLI::App* render = app.add_subcommand("render", "SVG drawing of a colored closure");
  in_render->add_to(render);
  render->add_option("--seed", *rd_seed, "left-end colors, e.g. 1,0,0,1")->required();
  render->add_option("--out", *rd_out, "output SVG path")->required();
  auto rd_colors = std::make_shared<std::vector<long long>>();
  render->callback([&, in_render, rd_seed, rd_out, rd_colors] {
    two_phase(exit_code,
              [&] {
                in_render->validate();
                *rd_colors = parse_csv_ints(*rd_seed, "--seed");
                if ((int)rd_colors->size() != in_render->word.strands)
                  fail(errc::LengthMismatch,
                       "--seed needs " + std::to_string(in_render->word.strands) +
                           " values, got " + std::to_string(rd_colors->size()));
              },
              [&] {
                Diagram d = close_braid(in_render->word);
                BigVec seed(rd_colors->begin(), rd_colors->end());
                BigVec coloring = coloring_from_seed(d, seed);
                write_svg(d, coloring, *rd_out);
                BigVec palette = coloring;
                std::sort(palette.begin(), palette.end());
                palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
                std::cout << "wrote " << *rd_out << " colors=" << palette.size() << '\n';
                return 0;
              });
  });

  // ---- verify-grid ----
  auto grid = std::make_shared<GridSpec>();
  auto vg_format = std::make_shared<std::string>();
  auto vg_out = std::make_shared<std::string>();
  CLI::App* verify_grid_cmd =
      app.add_subcommand("verify-grid", "colorability and classification over a parameter grid");
  verify_grid_cmd->add_option("--pmax", grid->pmax, "largest |p|")->default_val(5);
  verify_grid_cmd->add_option("--qmax", grid->qmax, "largest q")->default_val(3);
  verify_grid_cmd->add_option("--rmin", grid->rmin, "smallest r")->default_val(2);
  verify_grid_cmd->add_option("--rmax", grid->rmax, "largest r")->default_val(6);
  verify_grid_cmd->add_option("--max-crossings", grid->max_crossings,
                              "skip instances with more crossings")
      ->default_val(150);
  add_format_options(verify_grid_cmd, *vg_format, *vg_out);
  verify_grid_cmd->callback([&, grid, vg_format, vg_out] {
    two_phase(exit_code,
              [&] {
                if (grid->pmax < 1 || grid->qmax < 1 || grid->rmin < 2 ||
                    grid->rmax < grid->rmin || grid->max_crossings < 1)
                  fail(errc::InvalidParams,
                       "grid bounds must satisfy pmax,qmax >= 1, 2 <= rmin <= rmax, "
                       "max-crossings >= 1");
              },
              [&] { return emit_report(verify_grid(*grid), *vg_format, *vg_out); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return exit_code;
}
