#include "checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "entropic/centers.hpp"
#include "entropic/discriminants.hpp"
#include "entropic/errors.hpp"
#include "entropic/graphs.hpp"
#include "entropic/io.hpp"
#include "entropic/matroid.hpp"
#include "entropic/reciprocal.hpp"
#include "entropic/symdisc.hpp"
#include "entropic/symmetric.hpp"

namespace entropic::tools {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  Scalar next() {
    Scalar s(std::uniform_int_distribution<long>(-1000, 1000)(rng_), std::uniform_int_distribution<long>(1, 100)(rng_));
    s.canonicalize();
    return s;
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::vector<Scalar> vector(std::size_t n) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(next());
    return v;
  }
  ExactMatrix matrix(std::size_t r, std::size_t c) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = next();
    return m;
  }
  ExactMatrix symmetric(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = next();
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

// Collects failures; a check passes when nothing was recorded.
struct Log {
  std::ostringstream failures;
  int count = 0;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (count++ < 4) failures << (count > 1 ? "; " : "") << what;
  }
};

class Suite {
 public:
  explicit Suite(const CheckOptions& o) : opt_(o) {}

  ExactMatrix matrix(const std::string& name) const { return matrix_from_json(read(name)); }
  NamedPolynomial poly(const std::string& name) const { return polynomial_from_json(read(name)); }
  std::uint64_t seed(int offset) const { return opt_.seed + static_cast<std::uint64_t>(offset); }

  void run(const std::string& id, const std::string& title, const std::function<void(Log&)>& body,
           std::vector<CheckResult>& out) const {
    CheckResult r{id, title, false, "", 0};
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(log);
      r.pass = log.count == 0;
      r.detail = log.failures.str();
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }

 private:
  std::string read(const std::string& name) const { return read_text_file(opt_.fixture_dir + "/" + name + ".json"); }
  CheckOptions opt_;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

ExactMatrix vandermonde(std::size_t d, std::size_t n) {
  ExactMatrix m(d, n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar v = 1;
    for (std::size_t i = 0; i < d; ++i) {
      m(i, j) = v;
      v *= static_cast<long>(j + 1);
    }
  }
  return m;
}

// p(b) / q(b) is one nonzero constant over the samples with q(b) != 0.
bool one_ratio(const std::function<Scalar(const std::vector<Scalar>&)>& p,
               const std::function<Scalar(const std::vector<Scalar>&)>& q, std::size_t dim, int samples,
               Sampler& rng) {
  bool have = false;
  Scalar ratio;
  for (int i = 0; i < samples; ++i) {
    const auto b = rng.vector(dim);
    const Scalar l = p(b), r = q(b);
    if (r == 0) {
      if (l != 0) return false;
      continue;
    }
    if (!have) {
      ratio = l / r;
      have = true;
    } else if (l != ratio * r) {
      return false;
    }
  }
  return have && ratio != 0;
}

std::string str(const Integer& v) { return v.get_str(); }

void matroid_invariants(const Suite& s, Log& log) {
  auto timed = [&](const std::string& what, const std::function<bool()>& f) {
    const auto t = std::chrono::steady_clock::now();
    log.expect(f(), what);
    log.expect(seconds_since(t) < 1.0, what + " took over 1 s");
  };
  timed("chi(-K4)", [&] {
    Matroid m(s.matrix("minus_k4"));
    return m.char_poly_coefficients() == ints({7, -17, 15, -6, 1}) && mobius_invariant(m) == 7;
  });
  timed("chi(K4)", [&] { return Matroid(s.matrix("oriented_k4")).char_poly_coefficients() == ints({-6, 11, -6, 1}); });
  timed("mu(three-by-five)", [&] { return mobius_invariant(Matroid(s.matrix("three_by_five"))) == 4; });
  for (auto [d, n] : {std::pair<long, long>{2, 4}, {3, 5}, {3, 6}}) {
    timed("mu(U_" + std::to_string(d) + "," + std::to_string(n) + ")", [&] {
      return mobius_invariant(Matroid(vandermonde(d, n))) == binomial(n - 1, d - 1);
    });
  }
}

void degrees(const Suite& s, Log& log) {
  const auto t = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, long>> expected{{"three_by_five", 8}, {"generic_3x5", 16}, {"minus_k4", 22}, {"oriented_k4", 14}};
  for (long d = 2; d <= 6; ++d) expected.emplace_back("special_d" + std::to_string(d), d * (d - 1));
  for (const auto& [name, deg] : expected) {
    Matroid m(s.matrix(name));
    const Integer got = entropic_degree(m);
    log.expect(got == deg, name + " degree " + str(got));
    log.expect(entropic_degree_crosscheck(m) == got, name + " crosscheck differs");
  }
  for (const auto& name : {"two_by_four_a1", "two_by_four_a6", "generic_2x4"}) {
    Matroid m(s.matrix(name));
    log.expect(entropic_degree_crosscheck(m) == entropic_degree(m), std::string(name) + " crosscheck differs");
  }
  const long degs[] = {22, 270, 3148, 38990, 524858, 7705572, 123087958};
  const long mus[] = {7, 51, 431, 4208, 46824, 586141, 8161237};
  const auto rows = retina_table(10);
  log.expect(rows.size() == 7, "retina table size");
  for (std::size_t i = 0; i < rows.size() && i < 7; ++i) {
    log.expect(rows[i].degree == degs[i] && rows[i].mu == mus[i], "retina row d=" + std::to_string(rows[i].d));
  }
  log.expect(seconds_since(t) < 5.0, "degrees took over 5 s");
}

void corank_one(const Suite& s, Log& log) {
  const std::size_t counts[] = {3, 19, 201, 3081};
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto t = std::chrono::steady_clock::now();
    const auto& h = special_corank_one_disc(d);
    const double secs = seconds_since(t);
    log.expect(h.size() == counts[d - 2], "d=" + std::to_string(d) + " has " + std::to_string(h.size()) + " terms");
    Monomial lead;
    for (std::size_t i = 0; i + 1 < d; ++i) lead.set(i, static_cast<unsigned>(2 * (d - 1 - i)));
    log.expect(h.lex_leading_term().monomial == lead, "lex leader d=" + std::to_string(d));
    log.expect(secs < 300.0, "d=" + std::to_string(d) + " took over 5 min");
  }
  const auto printed = s.poly("special_d4_elementary");
  const auto ours = to_elementary(special_corank_one_disc(4));
  log.expect(ours.size() == 16, "e-expansion size");
  log.expect(proportional(ours, printed.poly), "e-expansion not proportional");
}

void d2_discriminants(const Suite& s, Log& log) {
  const auto family = s.poly("two_by_four_family");
  auto at = [&](long a) {
    std::vector<Polynomial> images{Polynomial::constant(2, a), Polynomial::variable(2, 0), Polynomial::variable(2, 1)};
    return family.poly.substitute(images);
  };
  log.expect(proportional(disc_d2(s.matrix("two_by_four_a1")).poly, at(1)), "a=1 not proportional to the printed family");
  const std::vector<std::string> b2{"b1", "b2"};
  log.expect(proportional(disc_d2(s.matrix("two_by_four_a6")).poly, parse_polynomial("(36 b1^2 - 24 b1 b2 + 5 b2^2)^2", b2)),
             "a=6 not the printed square");
  Sampler rng(s.seed(4));
  int done = 0, attempts = 0;
  while (done < 20 && attempts++ < 200) {
    const auto n = static_cast<std::size_t>(rng.integer(3, 6));
    ExactMatrix a(2, n);
    for (std::size_t j = 0; j < n; ++j) {
      a(0, j) = rng.integer(-9, 9);
      a(1, j) = rng.integer(-9, 9);
    }
    try {
      const auto h = disc_d2(a);
      log.expect(h.poly.total_degree() == static_cast<int>(2 * n - 4), "degree on a random 2x" + std::to_string(n));
      ++done;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ParallelColumns && e.kind() != ErrorKind::RankDeficient &&
          e.kind() != ErrorKind::ZeroColumn)
        throw;
    }
  }
  log.expect(done == 20, "could not draw 20 admissible 2 x n matrices");
}

void sos_identities(const Suite& s, Log& log) {
  Sampler rng(s.seed(5));
  const ExactMatrix three = ExactMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  const auto four = s.matrix("generic_2x4");
  for (const auto& a : {three, four}) {
    const auto h = disc_d2(a).poly;
    log.expect(one_ratio([&](const std::vector<Scalar>& b) { return plucker_sos_eval(a, b); },
                         [&](const std::vector<Scalar>& b) { return h.evaluate(b); }, 2, 100, rng),
               "Plucker sum n=" + std::to_string(a.cols()));
  }
  const auto squares = s.poly("ten_squares_d3");
  const auto& h3 = special_corank_one_disc(3);
  log.expect(one_ratio([&](const std::vector<Scalar>& b) { return squares.poly.evaluate(b); },
                       [&](const std::vector<Scalar>& b) { return h3.evaluate(b); }, 3, 100, rng),
             "ten squares");
}

void symmetric_discriminant(const Suite& s, Log& log) {
  Sampler rng(s.seed(6));
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto id = identity_matrix(m);
    for (int i = 0; i < 25; ++i) {
      const auto x = rng.symmetric(m);
      log.expect(symdisc(x, id) == generalized_char_disc(x, id), "identity metric m=" + std::to_string(m));
    }
  }
  for (std::size_t m = 2; m <= 3; ++m) {
    for (int i = 0; i < 10; ++i) {
      const auto b = rng.matrix(m, m);
      auto e = b.transpose() * b;
      for (std::size_t k = 0; k < m; ++k) e(k, k) += 1;
      const auto x = rng.symmetric(m);
      const Scalar scale = power(determinant(e), static_cast<unsigned>(2 * m - 2));
      log.expect(generalized_char_disc(x, e) == scale * symdisc(x, e), "generalized identity m=" + std::to_string(m));
      const auto cert = sos_certificate(x, e);
      Scalar total;
      for (const auto& t : cert.terms) total += t;
      log.expect(total == cert.gram_determinant && total == determinant(commutator_gram(x, e)),
                 "certificate sum m=" + std::to_string(m));
    }
  }
}

void hessian_formula(const Suite& s, Log& log) {
  Sampler rng(s.seed(7));
  std::vector<ExactMatrix> fixtures{ExactMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}), s.matrix("generic_2x4"),
                                    vandermonde(3, 4), s.matrix("three_by_five")};
  for (const auto& a : fixtures) {
    const std::string tag = std::to_string(a.rows()) + "x" + std::to_string(a.cols());
    log.expect(hessian_product(a) == hessian_direct(a), "Hessian formula " + tag);
    int good = 0;
    while (good < 50) {
      const auto z = rng.vector(a.rows());
      try {
        log.expect(projectively_equal(polar_map_eval(a, z), polar_map_composition(a, z)), "polar map " + tag);
        ++good;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::OnArrangement) throw;
      }
    }
  }
}

void solver(const Suite& s, Log& log) {
  auto count = [&](const ExactMatrix& a, const std::vector<Scalar>& b, const std::string& tag) {
    const Integer mu = mobius_invariant(Matroid(a));
    const auto chambers = bounded_chambers(a, b);
    log.expect(Integer(static_cast<long>(chambers.size())) == mu, tag + " chambers " + std::to_string(chambers.size()));
    const auto set = analytic_centers(a, b);
    log.expect(Integer(static_cast<long>(set.solutions.size())) == mu, tag + " solution count");
    for (double r : set.residuals) log.expect(r < 1e-9, tag + " residual");
    return set;
  };
  const std::vector<Scalar> b11{3, 2, 2};
  const auto set = count(s.matrix("three_by_five"), b11, "three-by-five");
  for (const auto& x : set.solutions) {
    const double z1 = 1 / x[0], z2 = 1 / x[1], z3 = 1 / x[2];
    const double e1 = 1 / z1 + 1 / (z1 + z2) + 1 / (z1 + z3) - 3;
    const double e2 = 1 / z2 + 1 / (z1 + z2) - 2;
    const double e3 = 1 / z3 + 1 / (z1 + z3) - 2;
    log.expect(std::fabs(e1) < 1e-9 && std::fabs(e2) < 1e-9 && std::fabs(e3) < 1e-9, "retina equations");
  }
  count(s.matrix("minus_k4"), {2, 3, 5, 7}, "-K4");
  Sampler rng(s.seed(8));
  for (long d = 2; d <= 5; ++d) count(s.matrix("special_d" + std::to_string(d)), rng.vector(d), "corank one d=" + std::to_string(d));
  count(s.matrix("generic_2x4"), {3, -2}, "2x4");
}

void real_locus(const Suite& s, Log& log) {
  const auto a = s.matrix("three_by_five");
  const auto comps = real_locus_components(Matroid(a));
  const std::vector<std::vector<Scalar>> points{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}};
  log.expect(comps.size() == 4, "three-by-five example has " + std::to_string(comps.size()) + " components");
  for (const auto& p : points) {
    int hits = 0;
    for (const auto& c : comps)
      if (c.span.rows() == 1) hits += projectively_equal(c.span.row(0), p);
    log.expect(hits == 1, "missing real point");
  }
  for (long d = 3; d <= 5; ++d) {
    const auto n = real_locus_components(Matroid(s.matrix("special_d" + std::to_string(d)))).size();
    log.expect(Integer(static_cast<long>(n)) == binomial(d, 2) + binomial(d, 3), "corank one d=" + std::to_string(d));
  }
  const std::vector<Scalar> start{3, 2, 2}, target{0, 1, 0}, control{5, 3, 4};
  const auto probe = double_root_probe(a, start, target, 24);
  log.expect(!probe.steps.empty() && probe.steps.back().gap < 1e-4, "probe gap did not fall below 1e-4");
  const auto ctl = double_root_probe(a, start, control, 24);
  log.expect(!ctl.failure, "control probe failed");
  for (const auto& st : ctl.steps) log.expect(st.gap > 1e-2, "control gap below 1e-2");
}

void reciprocal_plane(const Suite& s, Log& log) {
  Matroid k4(s.matrix("minus_k4"));
  const auto polys = circuit_polys(k4);
  log.expect(polys.size() == 3, "-K4 circuit count");
  for (int i = 1; i <= 3; ++i) {
    const auto printed = s.poly("minus_k4_cubic" + std::to_string(i)).poly;
    int hits = 0;
    for (const auto& cp : polys) hits += cp.poly == printed || cp.poly == -printed;
    log.expect(hits == 1, "cubic " + std::to_string(i));
  }
  for (auto [d, n] : {std::pair<std::size_t, std::size_t>{2, 4}, {2, 5}, {3, 5}}) {
    Matroid m(vandermonde(d, n));
    const auto chosen = circuits_through(m, n - 1);
    log.expect(Integer(static_cast<long>(chosen.size())) == binomial(static_cast<long>(n - 1), static_cast<long>(d)),
               "circuit subset size");
    log.expect(exposes(m, chosen), "subset does not expose");
  }
  Matroid ex(s.matrix("three_by_five"));
  log.expect(tangent_codim(ex, ColumnSet{1}) == 2, "point 1 not smooth");
  for (std::size_t i = 1; i < 5; ++i) log.expect(tangent_codim(ex, ColumnSet{1} << i) < 2, "point not singular");
}

void derivative_discriminant(const Suite& s, Log& log) {
  Sampler rng(s.seed(11));
  for (std::size_t n = 3; n <= 5; ++n) {
    bool have = false;
    Scalar ratio;
    for (int i = 0; i < 20; ++i) {
      const auto [lhs, rhs] = derivative_disc_check(rng.vector(n));
      if (rhs == 0) {
        log.expect(lhs == 0, "n=" + std::to_string(n));
        continue;
      }
      if (!have) {
        ratio = lhs / rhs;
        have = true;
      }
      log.expect(lhs == ratio * rhs, "constant differs at n=" + std::to_string(n));
    }
  }
}

void printed_fixture(const Suite& s, Log& log) {
  const auto h = s.poly("three_by_five_discriminant").poly;
  for (const auto& p : std::vector<std::vector<Scalar>>{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}})
    log.expect(h.evaluate(p) == 0, "does not vanish at a real point");
  Sampler rng(s.seed(12));
  for (int i = 0; i < 1000; ++i) log.expect(h.evaluate(rng.vector(3)) >= 0, "negative value");
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  Suite s(options);
  std::vector<CheckResult> out;
  auto bind = [&](void (*f)(const Suite&, Log&)) { return [&s, f](Log& log) { f(s, log); }; };
  s.run("1", "matroid invariants", bind(matroid_invariants), out);
  s.run("2", "entropic degrees and retina table", bind(degrees), out);
  s.run("3", "corank-one exact discriminants", bind(corank_one), out);
  s.run("4", "d = 2 exact discriminants", bind(d2_discriminants), out);
  s.run("5", "sum-of-squares identities", bind(sos_identities), out);
  s.run("6", "symmetric discriminant", bind(symmetric_discriminant), out);
  s.run("7", "Hessian formula and polar map", bind(hessian_formula), out);
  s.run("8", "chambers and analytic centers", bind(solver), out);
  s.run("9", "real locus and double-root probe", bind(real_locus), out);
  s.run("10", "reciprocal plane", bind(reciprocal_plane), out);
  s.run("11", "derivative discriminant", bind(derivative_discriminant), out);
  s.run("fixture", "printed three-by-five discriminant consistency", bind(printed_fixture), out);
  return out;
}

std::string format_line(const CheckResult& r) {
  std::ostringstream line;
  line << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << " (" << r.seconds << " s)";
  if (!r.detail.empty()) line << ": " << r.detail;
  return line.str();
}

}  // namespace entropic::tools
