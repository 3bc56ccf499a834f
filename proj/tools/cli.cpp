#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "checks.hpp"
#include "entropic/centers.hpp"
#include "entropic/discriminants.hpp"
#include "entropic/errors.hpp"
#include "entropic/graphs.hpp"
#include "entropic/io.hpp"
#include "entropic/matroid.hpp"
#include "entropic/reciprocal.hpp"
#include "entropic/symdisc.hpp"
#include "entropic/symmetric.hpp"
#include "json.hpp"

#ifndef ENTROPIC_FIXTURE_DIR
#define ENTROPIC_FIXTURE_DIR "fixtures"
#endif

namespace entropic::tools {

namespace {

using Json = nlohmann::ordered_json;

// Input that cannot be read or parsed is a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto load(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(what + ": " + e.what());
  }
}

ExactMatrix load_matrix(const std::string& path) {
  return load(path, [&] { return matrix_from_json(read_text_file(path)); });
}
GraphModel load_graph(const std::string& path) {
  return load(path, [&] { return graph_from_json(read_text_file(path)); });
}
std::vector<Scalar> load_vector(const std::string& text) {
  return load("vector \"" + text + "\"", [&] { return parse_vector(text); });
}

Json integer(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json one_based(ColumnSet s) {
  Json out = Json::array();
  for (auto i : members(s)) out.push_back(i + 1);
  return out;
}

Json scalars(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_string(s));
  return out;
}

Json polynomial(const Polynomial& p, const std::vector<std::string>& vars) {
  return Json::parse(polynomial_to_json(p, vars));
}

Json solution_json(const SolutionSet& set) {
  Json j;
  j["count"] = set.solutions.size();
  Json sols = Json::array();
  for (std::size_t i = 0; i < set.solutions.size(); ++i) {
    Json s;
    s["signs"] = set.signs[i];
    s["x"] = set.solutions[i];
    s["residual"] = set.residuals[i];
    s["iterations"] = set.iterations[i];
    sols.push_back(std::move(s));
  }
  j["solutions"] = std::move(sols);
  if (set.solutions.size() > 1) {
    j["min_pairwise_gap"] = set.min_pairwise_gap;
  } else {
    j["min_pairwise_gap"] = nullptr;
  }
  return j;
}

class Output {
 public:
  Output(std::ostream& out) : out_(out) {}
  void json(const Json& j) { text(j.dump(2) + "\n"); }
  void text(const std::string& s) {
    if (path_.empty()) {
      out_ << s;
      return;
    }
    std::ofstream f(path_);
    if (!f) throw UsageError("cannot write " + path_);
    f << s;
  }
  std::string path_;

 private:
  std::ostream& out_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic discriminants, reciprocal planes and analytic centers", "entropic"};
  app.require_subcommand(1);
  std::uint64_t seed = 20100;
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  Output output(out);
  std::string matrix_path, graph_path, b_text, from_text, to_text, metric_path, regime = "auto";
  std::string fixtures = ENTROPIC_FIXTURE_DIR;
  bool elementary = false;
  int steps = 40, decades = 6;
  std::size_t dmax = 10;

  auto matrix_opt = [&](CLI::App* c) { c->add_option("--matrix", matrix_path, "Matrix JSON file")->required(); };
  auto out_opt = [&](CLI::App* c) { c->add_option("--out", output.path_, "Write the result here instead of stdout"); };

  auto* matroid = app.add_subcommand("matroid", "Matroid of a matrix");
  matroid->require_subcommand(1);
  auto* info = matroid->add_subcommand("info", "Rank, characteristic polynomial, Mobius invariant, circuits and flats");
  matrix_opt(info);
  out_opt(info);

  auto* degree = app.add_subcommand("degree", "Degree of the entropic discriminant, two ways");
  matrix_opt(degree);
  out_opt(degree);

  auto* locus = app.add_subcommand("real-locus", "Linear spaces carrying the real zeros of the discriminant");
  matrix_opt(locus);
  out_opt(locus);

  auto* recip = app.add_subcommand("recip", "Reciprocal plane");
  recip->require_subcommand(1);
  auto* circuits = recip->add_subcommand("circuits", "Circuit polynomials");
  auto* ga = recip->add_subcommand("ga", "Sum of squared maximal minors times squared coordinates");
  auto* singular = recip->add_subcommand("singular", "Singular coordinate strata");
  for (auto* c : {circuits, ga, singular}) {
    matrix_opt(c);
    out_opt(c);
  }

  auto* disc = app.add_subcommand("disc", "Exact entropic discriminant (d = 2 or corank one)");
  matrix_opt(disc);
  out_opt(disc);
  disc->add_option("--regime", regime, "auto, d2 or corank1")
      ->check(CLI::IsMember({"auto", "d2", "corank1"}))
      ->capture_default_str();
  disc->add_flag("--elementary", elementary, "Also express the result in elementary symmetric polynomials");

  auto* sym = app.add_subcommand("symdisc", "Discriminant of a symmetric matrix against a metric");
  matrix_opt(sym);
  out_opt(sym);
  sym->add_option("--metric", metric_path, "Positive definite metric E (identity by default)");

  auto* solve = app.add_subcommand("solve", "Analytic centers of the bounded chambers of {Ax = b}");
  matrix_opt(solve);
  solve->add_option("--b", b_text, "Right-hand side, comma separated rationals")->required();
  solve->add_option("--json,--out", output.path_, "Write the result here instead of stdout");

  auto* probe = app.add_subcommand("probe", "Minimum solution gap along a path of right-hand sides (CSV)");
  matrix_opt(probe);
  out_opt(probe);
  probe->add_option("--from", from_text, "Start of the path")->required();
  probe->add_option("--to", to_text, "End of the path")->required();
  probe->add_option("--steps", steps, "Number of steps")->check(CLI::PositiveNumber)->capture_default_str();
  probe->add_option("--decades", decades, "Orders of magnitude covered toward the endpoint")
      ->check(CLI::Range(1, 15))
      ->capture_default_str();

  auto* graph = app.add_subcommand("graph", "Graph incidence matrices");
  graph->require_subcommand(1);
  auto* graph_matrix = graph->add_subcommand("matrix", "Full-rank incidence matrix of a graph");
  graph_matrix->add_option("--graph", graph_path, "Graph JSON file")->required();
  out_opt(graph_matrix);

  auto* table = app.add_subcommand("retina-table", "Degree and Mobius invariant for all-negative complete graphs");
  table->add_option("--dmax", dmax, "Largest number of nodes (4..10)")->check(CLI::Range(4, 10))->capture_default_str();
  out_opt(table);

  auto* retina = app.add_subcommand("retina", "Systems attached to graphs");
  retina->require_subcommand(1);
  auto* retina_solve = retina->add_subcommand("solve", "Analytic centers for a graph's incidence matrix");
  retina_solve->add_option("--graph", graph_path, "Graph JSON file")->required();
  retina_solve->add_option("--b", b_text, "Right-hand side, comma separated rationals")->required();
  retina_solve->add_option("--json,--out", output.path_, "Write the result here instead of stdout");

  auto* selftest = app.add_subcommand("selftest", "Run the fixture suite; exit 0 iff everything passes");
  selftest->add_option("--fixtures", fixtures, "Fixture directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*info) {
      Matroid m(load_matrix(matrix_path));
      Json j;
      j["rank"] = m.rank();
      j["columns"] = m.size();
      Json chi = Json::array();
      for (const auto& c : m.char_poly_coefficients()) chi.push_back(integer(c));
      j["char_poly"] = chi;
      j["char_poly_text"] = to_string(m.char_poly(), std::vector<std::string>{"t"});
      j["mobius"] = integer(mobius_invariant(m));
      j["basic"] = is_basic(m);
      j["circuits"] = m.circuits().size();
      j["flats"] = m.flat_count();
      output.json(j);
    } else if (*degree) {
      Matroid m(load_matrix(matrix_path));
      Json j;
      j["degree"] = integer(entropic_degree(m));
      j["crosscheck"] = integer(entropic_degree_crosscheck(m));
      output.json(j);
    } else if (*locus) {
      Matroid m(load_matrix(matrix_path));
      Json comps = Json::array();
      for (const auto& c : real_locus_components(m)) {
        Json item;
        item["flat"] = one_based(c.flat);
        Json cols = Json::array();
        for (auto i : c.spanning_columns) cols.push_back(i + 1);
        item["spanning_columns"] = cols;
        Json span = Json::array();
        for (std::size_t r = 0; r < c.span.rows(); ++r) span.push_back(scalars(c.span.row(r)));
        item["span"] = span;
        comps.push_back(std::move(item));
      }
      Json j;
      j["components"] = std::move(comps);
      output.json(j);
    } else if (*circuits) {
      Matroid m(load_matrix(matrix_path));
      const auto vars = default_variable_names("x", m.size());
      Json list = Json::array();
      for (const auto& cp : circuit_polys(m)) {
        Json item;
        item["support"] = one_based(cp.circuit.support);
        item["vector"] = scalars(cp.circuit.vector);
        item["polynomial"] = to_string(cp.poly, vars);
        list.push_back(std::move(item));
      }
      Json j;
      j["vars"] = vars;
      j["circuits"] = std::move(list);
      output.json(j);
    } else if (*ga) {
      const auto a = load_matrix(matrix_path);
      output.json(polynomial(g_A(a), default_variable_names("x", a.cols())));
    } else if (*singular) {
      Matroid m(load_matrix(matrix_path));
      Json list = Json::array();
      for (const auto& f : singular_strata(m)) {
        Json item;
        item["flat"] = one_based(f.members);
        item["rank"] = f.rank;
        item["tangent_codim"] = tangent_codim(m, f.members);
        list.push_back(std::move(item));
      }
      Json j;
      j["strata"] = std::move(list);
      output.json(j);
    } else if (*disc) {
      const auto a = load_matrix(matrix_path);
      const EntropicPoly h = regime == "auto" ? entropic_discriminant(a)
                             : regime == "d2" ? entropic_discriminant(a, Regime::D2)
                                              : entropic_discriminant(a, Regime::CorankOne);
      const auto vars = default_variable_names("b", a.rows());
      Json j;
      j["regime"] = h.regime == Regime::D2 ? "d2" : "corank1";
      j["degree"] = h.poly.total_degree();
      j["terms"] = h.poly.size();
      j["polynomial"] = polynomial(h.poly, vars);
      if (elementary) {
        const auto e = to_elementary(h.poly);
        j["elementary"] = polynomial(e, default_variable_names("e", a.rows()));
      }
      output.json(j);
    } else if (*sym) {
      const auto x = load_matrix(matrix_path);
      const auto e = metric_path.empty() ? identity_matrix(x.rows()) : load_matrix(metric_path);
      if (!is_symmetric(x)) raise(ErrorKind::NotSymmetric, "the matrix is not symmetric");
      const auto cert = sos_certificate(x, e);
      Json j;
      j["symdisc"] = to_string(symdisc(x, e));
      j["char_disc"] = to_string(generalized_char_disc(x, e));
      j["gram_determinant"] = to_string(cert.gram_determinant);
      j["certificate_terms"] = scalars(cert.terms);
      output.json(j);
    } else if (*solve || *retina_solve) {
      const auto a = *solve ? load_matrix(matrix_path) : incidence_matrix(load_graph(graph_path));
      const auto b = load_vector(b_text);
      const auto set = analytic_centers(a, b);
      Json j = solution_json(set);
      j["mobius"] = integer(mobius_invariant(Matroid(a)));
      output.json(j);
    } else if (*probe) {
      const auto a = load_matrix(matrix_path);
      const auto from = load_vector(from_text);
      const auto to = load_vector(to_text);
      const auto result = double_root_probe(a, from, to, steps, decades);
      std::ostringstream csv;
      csv << "step";
      for (std::size_t i = 0; i < from.size(); ++i) csv << ",b" << i + 1;
      csv << ",gap\n";
      char buf[64];
      for (std::size_t s = 0; s < result.steps.size(); ++s) {
        csv << s;
        for (const auto& v : result.steps[s].b) {
          std::snprintf(buf, sizeof buf, "%.17g", to_double(v));
          csv << ',' << buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g", result.steps[s].gap);
        csv << ',' << buf << '\n';
      }
      output.text(csv.str());
      if (result.failure) err << "probe stopped at " << *result.failure << '\n';
    } else if (*graph_matrix) {
      output.text(Json::parse(matrix_to_json(incidence_matrix(load_graph(graph_path)))).dump(2) + "\n");
    } else if (*table) {
      Json rows = Json::array();
      for (const auto& r : retina_table(dmax)) {
        Json item;
        item["d"] = r.d;
        item["degree"] = integer(r.degree);
        item["mu"] = integer(r.mu);
        rows.push_back(std::move(item));
      }
      Json j;
      j["rows"] = std::move(rows);
      output.json(j);
    } else if (*selftest) {
      bool all = true;
      for (const auto& r : run_checks({fixtures, seed})) {
        out << format_line(r) << '\n';
        all = all && r.pass;
      }
      return all ? 0 : 2;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_numeric() ? 3 : 2;
  }
  return 0;
}

}  // namespace entropic::tools
