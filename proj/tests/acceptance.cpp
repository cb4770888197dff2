// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.
//
//   acceptance [--expect-fail N]...
//
// Exit status is 0 when every criterion passes except those listed with
// --expect-fail, which must fail.

#include "univ/univ.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace univ;

namespace {

struct Outcome {
    bool exact = true;
    std::string note;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
};

void absorb(Outcome& o, const Check& c) {
    if (!c.pass && o.exact) {
        o.exact = false;
        o.note = c.name + ": " + c.closed + (c.oracle.empty() ? "" : " vs " + c.oracle);
    }
}

void absorb(Outcome& o, const SuiteReport& r) {
    for (const auto& c : r.checks) {
        absorb(o, c);
    }
}

Outcome check_waring() {
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
        auto [a, b] = waring_theorem(n);
        absorb(o, a);
        absorb(o, b);
    }
    return o;
}

Outcome check_inverse() {
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
        auto [a, b] = inverse_map(n);
        absorb(o, a);
        absorb(o, b);
    }
    return o;
}

Outcome check_faber() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        absorb(o, faber_condition(n, 12));
    }
    return o;
}

Outcome check_lemmas() {
    Outcome o;
    for (int N = 1; N <= 10; ++N) {
        SuiteOptions opt;
        opt.order = N;
        opt.seed = 20240 + static_cast<std::uint64_t>(N);
        opt.draws = 10;
        absorb(o, lemmas_suite(opt));
    }
    return o;
}

Outcome check_prop31() {
    Outcome o;
    const int N = 10;
    for (const Rational& p : prop31_parameters()) {
        absorb(o, detail::compare_series("expand_a p=" + to_string(p), expand_a(p, N), oracle::expand_a(p, N)));
        absorb(o, detail::compare_series("expand_b p=" + to_string(p), expand_b(p, N), oracle::expand_b(p, N)));
    }
    absorb(o, detail::compare_series("schwarzian", schwarzian(N), oracle::schwarzian(N)));
    return o;
}

Outcome check_moebius() {
    Outcome o;
    absorb(o, moebius_kernel(10));
    return o;
}

Outcome check_grunsky() {
    Outcome o;
    const int N = 10;
    const GrunskyTable table = grunsky_table(N);
    absorb(o, compare_tables("closed form vs log expansion", table, grunsky_oracle(N)));
    absorb(o, detail::compare_poly("beta(1,1) = b2", table.at(1, 1), b_var(2)));
    for (const auto& [key, value] : table.entries) {
        const auto [n, k] = key;
        absorb(o, detail::expect("symmetry at (" + std::to_string(n) + "," + std::to_string(k) + ")",
                                 value * make_rational(1, n) == table.at(k, n) * make_rational(1, k)));
        absorb(o, detail::expect("b1 absent at (" + std::to_string(n) + "," + std::to_string(k) + ")",
                                 !value.contains(Var(Family::b, 1))));
    }
    auto shifted = symbols(Family::b, N);
    shifted[0] = shifted[0] + Poly(1);
    absorb(o, compare_tables("oracle under b1 -> b1 + 1", table, grunsky_oracle(N, shifted)));
    return o;
}

/// The relation exactly as stated: structure constant (m - n).
Outcome check_virasoro() {
    Outcome o;
    const int N = 12;
    int failing = 0;
    int standard_failing = 0;
    std::string first;
    for (int n = -4; n <= 4; ++n) {
        for (int m = -4; m <= 4; ++m) {
            const VirasoroCheck literal = verify_virasoro(n, m, N, RelationForm::circle_fields);
            if (!literal.pass) {
                ++failing;
                const std::string line =
                    "[L" + std::to_string(n) + ", L" + std::to_string(m) + "] " + literal.mismatches.front();
                if (first.empty() || line.size() < first.size()) {
                    first = line;
                }
            }
            standard_failing += verify_virasoro(n, m, N, RelationForm::standard).pass ? 0 : 1;
        }
    }
    absorb(o, detail::compare_poly("^L0 . 1", build_hat(0, N).apply(Poly(1)), symbol(Family::h)));
    for (int k = 1; k <= 4; ++k) {
        absorb(o, detail::compare_poly("^L" + std::to_string(k) + " . 1", build_hat(k, N).apply(Poly(1)), Poly()));
    }
    const VirasoroCheck central = verify_virasoro(2, -2, N, RelationForm::circle_fields);
    absorb(o, detail::compare_poly("central (2,-2)", central.central, symbol(Family::cc) * make_rational(1, 2)));
    if (failing > 0) {
        std::ostringstream s;
        s << failing << "/81 pairs differ from (m-n) L_{n+m}; shortest: " << first << ". With (n-m) L_{n+m}: "
          << (81 - standard_failing) << "/81 pairs hold exactly";
        o.exact = false;
        o.note = s.str() + (o.note.empty() ? "" : "; " + o.note);
    }
    return o;
}

Outcome check_l_minus() {
    Outcome o;
    const int P = 8;
    for (int k = 1; k <= 5; ++k) {
        const DiffOp a = build_L_minus(k, P, LMinusForm::series);
        const DiffOp b = build_L_minus(k, P, LMinusForm::derivative);
        const DiffOp c = build_L_minus_oracle(k, P);
        absorb(o, detail::expect("L-" + std::to_string(k) + " series = derivative", a == b));
        absorb(o, detail::expect("L-" + std::to_string(k) + " series = residue", a == c));
    }
    absorb(o, detail::compare_poly("L-1 d/dc1", build_L_minus(1, P).deriv(1),
                                   c_var(2) * Rational(3) - c_var(1) * c_var(1) * Rational(2)));
    return o;
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) {
            expected_failures.insert(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N]...\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "Waring theorem, n <= 12, symbolic", 10, check_waring},
        {2, "Waring/Faber inverse maps, n <= 12", 10, check_inverse},
        {3, "Faber Phi_n defining condition, n <= 8, weight 12", 30, check_faber},
        {4, "product-expansion closed forms vs oracles, orders <= 10, 10 draws", 60, check_lemmas},
        {5, "expand_a, expand_b, schwarzian vs oracles, weight 10", 60, check_prop31},
        {6, "Schwarzian vanishes at c_j = a^j, weight 10", 10, check_moebius},
        {7, "Grunsky closed form vs log expansion, n + k <= 10", 30, check_grunsky},
        {8, "Virasoro relations with (m-n) L_{n+m}, |n|,|m| <= 4, p <= 12", 300, check_virasoro},
        {9, "L_-k series form = derivative form = residue oracle, k <= 5, p <= 8", 60, check_l_minus},
    };

    bool ok = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.exact = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget_seconds;
        const bool pass = o.exact && in_time;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << std::fixed
                  << std::setprecision(2) << seconds << " s, budget " << std::setprecision(0) << c.budget_seconds
                  << " s)\n";
        if (!o.note.empty()) {
            std::cout << "      " << o.note << '\n';
        }
        if (!in_time) {
            std::cout << "      over time budget\n";
        }
        const bool expected_fail = expected_failures.count(c.id) > 0;
        ok = ok && (pass != expected_fail);
        if (expected_fail && pass) {
            std::cout << "      criterion " << c.id << " was expected to fail\n";
        }
    }
    return ok ? 0 : 1;
}
