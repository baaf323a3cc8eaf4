#include "verify_paper.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hypercore/classify.hpp"
#include "hypercore/decompose.hpp"
#include "hypercore/hermite.hpp"
#include "hypercore/jensen.hpp"
#include "hypercore/json_io.hpp"
#include "hypercore/laguerre.hpp"
#include "hypercore/numeric.hpp"
#include "hypercore/series.hpp"
#include "hypercore/sturm.hpp"

namespace hypercore::tools {

namespace {

using nlohmann::json;

json load_fixture(const std::string& dir, const std::string& id) {
  const std::string path = dir + "/" + id + ".json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  json j;
  in >> j;
  return j;
}

class Checker {
 public:
  explicit Checker(ExampleReport* rep) : rep_(rep) {}

  void expect(bool ok, const std::string& what) {
    rep_->notes.push_back(std::string(ok ? "ok: " : "MISMATCH: ") + what);
    rep_->pass = rep_->pass && ok;
  }

  template <typename T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    expect(got == want, what);
  }

 private:
  ExampleReport* rep_;
};

std::map<int, Poly> terms_from_json(const json& j) {
  std::map<int, Poly> terms;
  for (const auto& [key, val] : j.items())
    terms.emplace(std::stoi(key), poly_from_json(val));
  return terms;
}

// factor(x) * e^{rate x}, truncated.
TruncSeries descriptor_series(const json& j, int order) {
  const Poly factor = poly_from_json(j.at("factor"));
  const Rational rate = Rational::from_string(j.at("rate").get<std::string>());
  return TruncSeries::from_poly(factor, order) * TruncSeries::exp(rate, order);
}

std::vector<Rational> rationals_from_json(const json& j) {
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

void run_hermfinin(const json& f, Checker& c) {
  const int order = f.at("order").get<int>();
  const Basis hermite{BasisKind::kHermite};
  const DiffOp t = peetre_expand(
      hermite, SeqSpec::parse(f.at("eigs_finite").get<std::string>()), order);
  c.expect_eq(t, DiffOp(terms_from_json(f.at("finite_terms")), order),
              "expansion of the finite-order action");
  const int worder = f.at("alternating_prefix_order").get<int>();
  const DiffOp w = peetre_expand(
      hermite, SeqSpec::parse(f.at("eigs_alternating").get<std::string>()),
      worder);
  c.expect_eq(
      w, DiffOp(terms_from_json(f.at("alternating_prefix_terms")), worder),
      "prefix of the infinite-order expansion");
}

void check_row_against(const DiffOp& row, const json& expected_terms,
                       const json& input, const json& image, Checker& c,
                       const std::string& label) {
  c.expect(row.terms() == terms_from_json(expected_terms),
           label + " has the highlighted terms");
  const Poly in = poly_from_json(input);
  const Poly want = poly_from_json(image);
  const Poly got = row.with_order(std::max(row.order(), in.degree())).apply(in);
  c.expect_eq(got, want, label + " image of the witness input");
  c.expect(!is_hyperbolic(got), label + " witness image has non-real zeros");
}

void run_qua(const json& f, Checker& c) {
  const Poly q2 = poly_from_json(f.at("q2"));
  const Poly q1 = poly_from_json(f.at("q1"));
  const Poly q0 = poly_from_json(f.at("q0"));
  const Verdict v = quad_op_hp_check(q2, q1, q0);
  c.expect(v.status == VerdictStatus::kPassDecided,
           "quadratic criterion decides preservation");
  c.expect(v.value && *v.value == Rational::from_string(
                                      f.at("turan_value").get<std::string>()),
           "exact value of the quadratic expression");
  const DiffOp t{{{2, q2}, {1, q1}, {0, q0}}, 2};
  check_row_against(tn_operator_terms(t, 1), f.at("row1_terms"),
                    f.at("witness_input"), f.at("witness_image"), c, "row 1");
}

void run_leg_cube(const json& f, Checker& c) {
  const DiffOp base{{{2, poly_from_json(f.at("base_q2"))},
                     {1, poly_from_json(f.at("base_q1"))},
                     {0, poly_from_json(f.at("base_q0"))}},
                    2};
  const DiffOp cube = compose(compose(base, base), base);
  c.expect_eq(cube, DiffOp(terms_from_json(f.at("cube_terms")), 6),
              "all seven coefficient polynomials of the cube");
  const int upto = f.at("eigenvalue_check_upto").get<int>();
  bool eig = true;
  for (int n = 0; n <= upto; ++n) {
    const Poly pn = legendre_poly(n);
    const Rational lambda =
        Rational::pow(Rational(1L * n * n + n + 1), 3);
    eig = eig && (cube.apply(pn) == pn * lambda);
  }
  c.expect(eig, "cube acts as (n^2+n+1)^3 on the basis");

  const DiffOp t4 = tn_operator_terms(cube, 4);
  c.expect(t4.terms() == terms_from_json(f.at("row4_terms")),
           "row 4 collects the highlighted terms");
  const Verdict v = quad_op_hp_check(t4.q(2), t4.q(1), t4.q(0));
  c.expect(v.status == VerdictStatus::kFail,
           "row 4 fails the quadratic criterion");
  c.expect(v.value && *v.value == Rational::from_string(
                                      f.at("row4_turan_value").get<std::string>()),
           "exact failing value of the quadratic expression");
  const Verdict fal = hp_falsify(t4.with_order(16), standard_corpus());
  c.expect(fal.status == VerdictStatus::kFail,
           "falsifier finds a corpus witness against row 4");
}

void run_shifted(const json& f, Checker& c, BasisKind kind,
                 const std::string& row_key, int row_index) {
  const Basis basis(kind, Rational(1),
                    Rational::from_string(f.at("basis_shift").get<std::string>()));
  const int order = f.at("order").get<int>();
  const DiffOp t = peetre_expand(
      basis, SeqSpec::parse(f.at("eigs").get<std::string>()), order);
  c.expect_eq(t, DiffOp(terms_from_json(f.at("terms")), order),
              "expansion on the shifted basis");
  check_row_against(tn_operator_terms(t, row_index), f.at(row_key),
                    f.at("witness_input"), f.at("witness_image"), c,
                    "row " + std::to_string(row_index));
}

void run_malo(const json& f, Checker& c) {
  const Poly p = poly_from_json(f.at("p"));
  const DiffOp t{{{0, p},
                  {1, -p.derivative()},
                  {2, p.derivative(2) * Rational(1, 2)},
                  {3, p.derivative(3) * Rational(-1, 6)}},
                 3};
  c.expect_eq(t, DiffOp(terms_from_json(f.at("terms")), 3),
              "composition operator built from p");
  check_row_against(tn_operator_terms(t, 1), f.at("row1_terms"),
                    f.at("witness_input"), f.at("witness_image"), c, "row 1");
}

void run_notdia(const json& f, Checker& c) {
  const DiffOp t{terms_from_json(f.at("terms")), 2};
  const TnDecomposition d = decompose(t);
  std::vector<int> indices;
  for (const auto& [n, row] : d.rows()) indices.push_back(n);
  c.expect_eq(indices, f.at("entry_indices").get<std::vector<int>>(),
              "Laurent window of the decomposition");
  c.expect_eq(reconstruct(d), t, "decomposition reconstructs the operator");
  check_row_against(tn_operator_terms(t, 0), f.at("row0_terms"),
                    f.at("witness_input"), f.at("witness_image"), c, "row 0");
}

void run_notherm1(const json& f, Checker& c) {
  const auto s = SeqSpec::parse(f.at("eigs").get<std::string>());
  const int order = f.at("series_order").get<int>();
  const auto& hs = f.at("h_series");
  for (int n = 0; n < static_cast<int>(hs.size()); ++n) {
    const TruncSeries h = hermite::hn(s, n, order);
    const TruncSeries want =
        descriptor_series(hs[static_cast<std::size_t>(n)], h.order());
    c.expect_eq(h, want, "h_" + std::to_string(n) + " series");
  }
  const Rational scale =
      Rational::from_string(f.at("row2_eigenvalue_scale").get<std::string>());
  bool row2 = true;
  for (int m = 0; m <= 10; ++m)
    row2 = row2 &&
           (hermite::bnk(s, 1, m) == scale * Rational(neg_one_pow(m)));
  c.expect(row2, "row 2 alternates with the expected scale");

  const Basis hermite_basis{BasisKind::kHermite};
  const Poly input = poly_from_json(f.at("witness_input"));
  c.expect_eq(hermite_basis.expand(input),
              rationals_from_json(f.at("hermite_coordinates_of_input")),
              "basis coordinates of the witness input");
  const DiffOp t = peetre_expand(hermite_basis, s, 4);
  const Poly image = t.apply(input);
  c.expect_eq(image, poly_from_json(f.at("witness_image")),
              "image of the witness input");
  c.expect(!is_hyperbolic(image), "witness image has non-real zeros");

  const TnDecomposition d = decompose(peetre_expand(hermite_basis, s, 9));
  bool odd_free = true;
  for (const auto& [n, row] : d.rows()) odd_free = odd_free && (n % 2 == 0);
  c.expect(odd_free, "decomposition has no odd entries");
}

void run_notherm2(const json& f, Checker& c) {
  const auto s = SeqSpec::parse(f.at("eigs").get<std::string>());
  const Rational base =
      Rational::from_string(f.at("row_base").get<std::string>());
  const Rational rate =
      Rational::from_string(f.at("exp_rate").get<std::string>());
  const int rows = f.at("rows_upto").get<int>();
  const int entries = f.at("entries_upto").get<int>();
  bool all = true;
  for (int n = 0; n <= rows; ++n) {
    const Rational scale =
        Rational::pow(base, n) / Rational(factorial(n));
    for (int k = 0; k <= entries; ++k)
      all = all && (hermite::bnk(s, n, k) == scale * Rational::pow(rate, k));
  }
  c.expect(all, "row series collapse to scaled exponentials");
  const Verdict v = hermite_ms_check(s, 12);
  c.expect(v.status == VerdictStatus::kFail && v.check == "monotonicity",
           "sequence fails the Hermite criterion by monotonicity");
}

void run_laguerre_shift(const json& f, Checker& c) {
  const auto s = SeqSpec::parse(f.at("eigs").get<std::string>());
  const Poly fpoly = poly_from_json(f.at("f"));
  c.expect_eq(gstar_values(s, 5), rationals_from_json(f.at("gstar_prefix")),
              "reversed-Jensen values");
  const auto fp = gstar_polynomial(s);
  c.expect(fp && *fp == fpoly, "f recovered as a polynomial");
  const auto& hs = f.at("h_polys");
  for (int n = 0; n < static_cast<int>(hs.size()); ++n) {
    c.expect_eq(laguerre::hn(s, n),
                poly_from_json(hs[static_cast<std::size_t>(n)]),
                "h_" + std::to_string(n));
  }
  const Verdict v = laguerre_ms_check(s);
  c.expect(v.status == VerdictStatus::kFail && v.witness_poly == fpoly,
           "Laguerre criterion fails with witness f");
}

void run_m52(const json& f, Checker& c) {
  const auto s = SeqSpec::parse(f.at("eigs").get<std::string>());
  const Rational tol =
      Rational::from_string(f.at("tolerance").get<std::string>());
  const Poly g5 = jensen_poly(s, 5);
  const auto want = rationals_from_json(f.at("jensen5_coeffs"));
  bool jensen_ok = true;
  for (int k = 0; k < static_cast<int>(want.size()); ++k)
    jensen_ok = jensen_ok &&
                (g5.coeff(k) - want[static_cast<std::size_t>(k)]).abs() <= tol;
  c.expect(jensen_ok, "fifth Jensen polynomial within tolerance");

  const auto row3 = rationals_from_json(f.at("table_row3"));
  const Rational b30 = hermite::bnk(s, 3, 0);
  const Rational b31 = hermite::bnk(s, 3, 1);
  c.expect((b30 - row3[0]).abs() <= tol && (b31 - row3[1]).abs() <= tol,
           "table row 3 entries within tolerance");
  c.expect(b30.sign() < 0 && b31.sign() < 0 && b30 < b31,
           "row 3 is negative and increasing");

  std::vector<Rational> row;
  Rational bound(0);
  for (int m = 0; m <= 4; ++m) {
    row.push_back(hermite::bnk(s, 3, m));
    const Rational b =
        s.error_bound() * Rational(int_pow(mpz_class(3), m + 2));
    if (b > bound) bound = b;
  }
  const Verdict v =
      hermite_ms_check(SeqSpec::explicit_list(std::move(row), bound), 4);
  c.expect(v.status == VerdictStatus::kFail,
           "row 3 fails the Hermite criterion beyond the error bound");
}

using Runner = std::function<void(const json&, Checker&)>;

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> reg = {
      {"hermfinin", run_hermfinin},
      {"qua", run_qua},
      {"leg-cube", run_leg_cube},
      {"sher-plus",
       [](const json& f, Checker& c) {
         run_shifted(f, c, BasisKind::kHermite, "row2_terms", 2);
       }},
      {"sher-minus",
       [](const json& f, Checker& c) {
         run_shifted(f, c, BasisKind::kHermite, "row2_terms", 2);
       }},
      {"slag",
       [](const json& f, Checker& c) {
         run_shifted(f, c, BasisKind::kLaguerre, "row1_terms", 1);
       }},
      {"malo", run_malo},
      {"notdia", run_notdia},
      {"notherm1", run_notherm1},
      {"notherm2", run_notherm2},
      {"laguerre-shift", run_laguerre_shift},
      {"m52", run_m52},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& known_examples() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

ExampleReport verify_example(const std::string& id,
                             const std::string& fixtures_dir) {
  const auto it = registry().find(id);
  if (it == registry().end())
    throw std::invalid_argument("unknown example \"" + id + "\"");
  const json f = load_fixture(fixtures_dir, id);
  ExampleReport rep;
  rep.id = id;
  rep.title = f.value("title", "");
  Checker c(&rep);
  it->second(f, c);
  return rep;
}

}  // namespace hypercore::tools
