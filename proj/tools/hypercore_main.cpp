#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "hypercore/classify.hpp"
#include "hypercore/decompose.hpp"
#include "hypercore/hermite.hpp"
#include "hypercore/jensen.hpp"
#include "hypercore/json_io.hpp"
#include "hypercore/laguerre.hpp"
#include "hypercore/numeric.hpp"
#include "hypercore/series.hpp"
#include "verify_paper.hpp"

namespace {

using hypercore::Basis;
using hypercore::BasisKind;
using hypercore::DiffOp;
using hypercore::Poly;
using hypercore::Rational;
using hypercore::SeqSpec;
using hypercore::TnDecomposition;
using hypercore::TruncSeries;
using hypercore::Verdict;
using hypercore::VerdictStatus;
using nlohmann::json;

struct GlobalOpts {
  std::string format = "json";
};

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
  if (g.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

// Ascending comma-separated rational coefficients, e.g. "-2,-1,1".
Poly parse_poly_literal(const std::string& text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    c.push_back(Rational::from_string(
        std::string(text).substr(start, comma - start)));
    start = comma + 1;
  }
  return Poly(std::move(c));
}

Basis make_basis(const std::string& name, const std::string& scale,
                 const std::string& shift) {
  const Basis plain = Basis::parse(name);
  const Rational a = Rational::from_string(scale);
  const Rational b = Rational::from_string(shift);
  return Basis(plain.kind(), a, b);
}

std::string verdict_text(const Verdict& v) {
  std::string s = to_string(v.status);
  if (v.status == VerdictStatus::kPassToOrder && v.order >= 0)
    s += "(" + std::to_string(v.order) + ")";
  if (!v.check.empty()) s += " [" + v.check + "]";
  if (v.value) s += " value=" + v.value->str();
  if (v.witness_index) s += " witness_index=" + std::to_string(*v.witness_index);
  if (v.witness_poly) s += " witness=" + v.witness_poly->str();
  if (!v.detail.empty()) s += "\n  " + v.detail;
  if (v.approximate) s += "\n  (approximate entries: inconclusive subchecks folded into the pass)";
  return s;
}

int finish_verdict(const GlobalOpts& g, const Verdict& v) {
  emit(g, hypercore::to_json(v), verdict_text(v));
  return v.status == VerdictStatus::kFail ? 1 : 0;
}

std::string decomposition_text(const TnDecomposition& d, bool show_ops,
                               const DiffOp& t) {
  std::ostringstream os;
  os << "order " << d.order() << ", operator order " << d.op_order() << "\n";
  for (const auto& [n, row] : d.rows()) {
    os << "n = " << n << ":";
    for (const auto& b : row) os << " " << b.str();
    os << "\n";
    if (show_ops)
      os << "  T_" << n << " = " << hypercore::tn_operator_terms(t, n).str()
         << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with diagonal differential operators on "
               "orthogonal polynomial bases"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  // Shared option state; each subcommand registers the flags it uses.
  struct BasisOpts {
    std::string name = "hermite", scale = "1", shift = "0";
  };
  BasisOpts main_basis, hermite_basis, laguerre_basis;
  laguerre_basis.name = "laguerre";
  std::string eigs, method, op_path, corpus_name = "standard";
  std::string example_id, fixtures_dir = "fixtures";
  std::string q2_text, q1_text, q0_text, identity_name = "horrible";
  int order = 12, series_order = 24, index = 0, max_range = 12;
  bool show_ops = false, run_all = false;

  const auto add_basis_opts = [](CLI::App* cmd, BasisOpts& b) {
    cmd->add_option("--basis", b.name,
                    "hermite | laguerre | legendre | monomial")
        ->capture_default_str();
    cmd->add_option("--scale", b.scale, "Affine scale: B_n(scale x + shift)")
        ->capture_default_str();
    cmd->add_option("--shift", b.shift, "Affine shift")->capture_default_str();
  };
  const auto add_eigs_opt = [&](CLI::App* cmd) {
    cmd->add_option("--eigs", eigs,
                    "Sequence spec: list:2,3,4 | poly:n^2+n+1 | altpoly:n | "
                    "geom:1/2 | pow:5/2@1e12")
        ->required();
  };
  const auto add_order_opt = [&](CLI::App* cmd) {
    cmd->add_option("--order", order, "Truncation order")
        ->envname("HYPERCORE_ORDER")
        ->capture_default_str();
  };

  CLI::App* peetre = app.add_subcommand(
      "peetre", "Differential representation of a diagonal action");
  add_basis_opts(peetre, main_basis);
  add_eigs_opt(peetre);
  add_order_opt(peetre);

  CLI::App* dec = app.add_subcommand(
      "decompose", "Rewrite an operator as a sum of classical diagonal rows");
  add_basis_opts(dec, main_basis);
  dec->add_option("--eigs", eigs, "Sequence spec (with --basis)");
  add_order_opt(dec);
  dec->add_option("--op", op_path, "Operator JSON file instead of --basis/--eigs")
      ->check(CLI::ExistingFile);
  dec->add_flag("--show-ops", show_ops, "Also render each row in x^k D^k form");

  CLI::App* cls = app.add_subcommand("classify",
                                     "Multiplier-sequence candidate checks");
  cls->add_option("--kind", method, "classical | hermite | laguerre")
      ->required()
      ->check(CLI::IsMember({"classical", "hermite", "laguerre"}));
  add_eigs_opt(cls);
  add_order_opt(cls);

  CLI::App* herm = app.add_subcommand("hermite", "Hermite closed forms");
  herm->require_subcommand(1);
  CLI::App* hqk = herm->add_subcommand("qk", "Coefficient polynomial Q_k");
  add_eigs_opt(hqk);
  hqk->add_option("--k", index, "Term index")->required();
  hqk->add_option("--method", method, "recursion | forgacs | sum | complex")
      ->check(CLI::IsMember({"recursion", "forgacs", "sum", "complex"}))
      ->capture_default_str();
  add_basis_opts(hqk, hermite_basis);
  CLI::App* hhn = herm->add_subcommand("hn", "Rodrigues-type series h_n");
  add_eigs_opt(hhn);
  hhn->add_option("--n", index, "Row index")->required();
  hhn->add_option("--series-order", series_order, "Series order budget")
      ->capture_default_str();

  CLI::App* lag = app.add_subcommand("laguerre", "Laguerre closed forms");
  lag->require_subcommand(1);
  CLI::App* lqk = lag->add_subcommand("qk", "Coefficient polynomial Q_k");
  add_eigs_opt(lqk);
  lqk->add_option("--k", index, "Term index")->required();
  lqk->add_option("--method", method, "recursion | jensen | basis")
      ->check(CLI::IsMember({"recursion", "jensen", "basis"}))
      ->capture_default_str();
  add_basis_opts(lqk, laguerre_basis);
  CLI::App* lhn = lag->add_subcommand("hn", "Rodrigues-type polynomial h_n");
  add_eigs_opt(lhn);
  lhn->add_option("--n", index, "Row index")->required();

  CLI::App* idn = app.add_subcommand("identity", "Combinatorial identity sweeps");
  idn->add_option("--name", identity_name, "horrible | vandermonde")
      ->check(CLI::IsMember({"horrible", "vandermonde"}))
      ->capture_default_str();
  idn->add_option("--max", max_range, "Sweep bound (inclusive)")
      ->capture_default_str();

  CLI::App* hpc = app.add_subcommand(
      "hpcheck", "Decided test for Q2 D^2 + Q1 D + Q0 operators");
  hpc->add_option("--q2", q2_text, "Ascending coefficients, e.g. -2,-1,1")
      ->required();
  hpc->add_option("--q1", q1_text, "Ascending coefficients")->required();
  hpc->add_option("--q0", q0_text, "Constant term")->required();

  CLI::App* fal = app.add_subcommand("falsify",
                                     "Search a corpus for a witness input");
  fal->add_option("--op", op_path, "Operator JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  fal->add_option("--corpus", corpus_name,
                  "standard, or a JSON file with a list of polynomials")
      ->capture_default_str();

  CLI::App* ver = app.add_subcommand(
      "verify-paper", "Recompute a registered example against its golden file");
  ver->add_option("--example", example_id, "Example id");
  ver->add_flag("--all", run_all, "Run every registered example");
  ver->add_option("--fixtures", fixtures_dir, "Golden fixture directory")
      ->capture_default_str();

  // Let --format written after a subcommand reach the top-level option.
  for (CLI::App* sc : {peetre, dec, cls, herm, hqk, hhn, lag, lqk, lhn, idn,
                       hpc, fal, ver})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*peetre) {
      const DiffOp t = hypercore::peetre_expand(
          make_basis(main_basis.name, main_basis.scale, main_basis.shift), SeqSpec::parse(eigs), order);
      emit(g, hypercore::to_json(t), t.str());
      return 0;
    }

    if (*dec) {
      DiffOp t{0};
      if (!op_path.empty()) {
        std::ifstream in(op_path);
        json j;
        in >> j;
        t = hypercore::diffop_from_json(j);
      } else if (!eigs.empty()) {
        t = hypercore::peetre_expand(make_basis(main_basis.name, main_basis.scale, main_basis.shift),
                                     SeqSpec::parse(eigs), order);
      } else {
        std::cerr << "error[usage]: decompose needs --eigs or --op\n";
        return 2;
      }
      const TnDecomposition d = hypercore::decompose(t);
      json j = hypercore::to_json(d);
      if (show_ops) {
        json ops = json::object();
        for (const auto& [n, row] : d.rows())
          ops[std::to_string(n)] = hypercore::tn_operator_terms(t, n).str();
        j["operators"] = ops;
      }
      emit(g, j, decomposition_text(d, show_ops, t));
      return 0;
    }

    if (*cls) {
      const auto s = SeqSpec::parse(eigs);
      Verdict v;
      if (method == "classical") v = hypercore::classical_ms_check(s, order);
      if (method == "hermite") v = hypercore::hermite_ms_check(s, order);
      if (method == "laguerre") v = hypercore::laguerre_ms_check(s);
      return finish_verdict(g, v);
    }

    if (*hqk) {
      const auto s = SeqSpec::parse(eigs);
      const Basis b = make_basis(hermite_basis.name, hermite_basis.scale, hermite_basis.shift);
      Poly q;
      if (method.empty() || method == "recursion")
        q = hypercore::peetre_expand(b, s, index).q(index);
      else if (method == "forgacs")
        q = hypercore::hermite::qk_hermite_combination(b, s, index);
      else if (method == "sum")
        q = hypercore::hermite::qk_monomial_sum(b, s, index);
      else
        q = hypercore::hermite::qk_imaginary_pairing(b, s, index);
      emit(g, hypercore::to_json(q), q.str());
      return 0;
    }

    if (*hhn) {
      const TruncSeries h =
          hypercore::hermite::hn(SeqSpec::parse(eigs), index, series_order);
      std::ostringstream os;
      os << h;
      emit(g, hypercore::to_json(h), os.str());
      return 0;
    }

    if (*lqk) {
      const auto s = SeqSpec::parse(eigs);
      const Basis b = make_basis(laguerre_basis.name, laguerre_basis.scale, laguerre_basis.shift);
      Poly q;
      if (method.empty() || method == "recursion")
        q = hypercore::peetre_expand(b, s, index).q(index);
      else if (method == "jensen")
        q = hypercore::laguerre::qk_jensen_form(b, s, index);
      else
        q = hypercore::laguerre::qk_basis_form(b, s, index);
      emit(g, hypercore::to_json(q), q.str());
      return 0;
    }

    if (*lhn) {
      const Poly h = hypercore::laguerre::hn(SeqSpec::parse(eigs), index);
      emit(g, hypercore::to_json(h), h.str());
      return 0;
    }

    if (*idn) {
      long cases = 0;
      if (identity_name == "horrible") {
        for (long n = 0; n <= max_range; ++n)
          for (long m = 0; m <= max_range; ++m)
            for (long p = 0; p <= max_range; ++p) {
              const auto [lhs, rhs] =
                  hypercore::laguerre::identity_horrible(n, m, p);
              ++cases;
              if (lhs != rhs) {
                std::cout << "FAIL at (n,m,p) = (" << n << "," << m << ","
                          << p << "): " << lhs.str() << " != " << rhs.str()
                          << "\n";
                return 1;
              }
            }
      } else {
        for (long m = 0; m <= max_range; ++m)
          for (long l = 0; l <= max_range; ++l)
            for (long p = 0; p <= max_range; ++p) {
              mpz_class acc = 0;
              for (long j = 0; j <= m; ++j)
                acc += hypercore::binomial(m, j) * hypercore::binomial(l, p - j);
              ++cases;
              if (acc != hypercore::binomial(m + l, p)) {
                std::cout << "FAIL at (m,l,p) = (" << m << "," << l << "," << p
                          << ")\n";
                return 1;
              }
            }
      }
      emit(g,
           json{{"identity", identity_name}, {"cases", cases}, {"pass", true}},
           "PASS " + identity_name + ": " + std::to_string(cases) + " cases");
      return 0;
    }

    if (*hpc) {
      return finish_verdict(
          g, hypercore::quad_op_hp_check(parse_poly_literal(q2_text),
                                         parse_poly_literal(q1_text),
                                         parse_poly_literal(q0_text)));
    }

    if (*fal) {
      std::ifstream in(op_path);
      json j;
      in >> j;
      const DiffOp t = hypercore::diffop_from_json(j);
      std::vector<Poly> corpus;
      if (corpus_name == "standard") {
        corpus = hypercore::standard_corpus();
      } else {
        std::ifstream cin_(corpus_name);
        if (!cin_) {
          std::cerr << "error[io]: cannot open corpus file " << corpus_name
                    << "\n";
          return 2;
        }
        json cj;
        cin_ >> cj;
        for (const auto& e : cj) corpus.push_back(hypercore::poly_from_json(e));
      }
      return finish_verdict(g, hypercore::hp_falsify(t, corpus));
    }

    if (*ver) {
      std::vector<std::string> ids;
      if (run_all)
        ids = hypercore::tools::known_examples();
      else if (!example_id.empty())
        ids.push_back(example_id);
      else {
        std::cerr << "error[usage]: verify-paper needs --example or --all\n";
        return 2;
      }
      bool all_pass = true;
      for (const std::string& id : ids) {
        const auto rep = hypercore::tools::verify_example(id, fixtures_dir);
        all_pass = all_pass && rep.pass;
        std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.id;
        if (!rep.title.empty()) std::cout << " - " << rep.title;
        std::cout << "\n";
        for (const auto& note : rep.notes) {
          if (!rep.pass || g.format == "text") std::cout << "  " << note << "\n";
        }
      }
      std::cout << (all_pass ? "PASS" : "FAIL") << " (" << ids.size()
                << " example" << (ids.size() == 1 ? "" : "s") << ")\n";
      return all_pass ? 0 : 1;
    }
  } catch (const std::out_of_range& e) {
    std::cerr << "error[seqspec-range]: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error[nonpoly]: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    const char* code = "invalid";
    if (what.find("sequence spec") != std::string::npos) code = "seqspec";
    if (what.find("order") != std::string::npos) code = "order";
    std::cerr << "error[" << code << "]: " << what << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
