// Acceptance suite: one pass/fail line per criterion, exact tolerances pinned
// in code. Exit code 0 iff every criterion passes except the single documented
// discriminant-identity clause of criterion 8, which is asserted as stated and
// reported honestly (the stated closed form belongs to the x^b - x - 1 family;
// the resultant kernel and an independent numeric oracle agree on the correct
// value, which is asserted alongside).

#include "bogocert/bounds.hpp"
#include "bogocert/constructor.hpp"
#include "bogocert/errors.hpp"
#include "bogocert/jobs.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

using namespace bogocert;
namespace oracle = bogocert::testing;

namespace {

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<Criterion> g_results;

void record(const std::string& name, bool pass, const std::string& detail) {
    g_results.push_back({name, pass, detail});
    std::printf("criterion %s: %s — %s\n", name.c_str(), pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

FieldPtr Q() {
    static FieldPtr q = NumberField::create(IntPoly::x());
    return q;
}
FieldPtr Qi() {
    static FieldPtr qi = NumberField::create(IntPoly::parse("x^2+1"));
    return qi;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

unsigned long v_ell(const Int& n, const Int& ell) {
    Int tmp, a = abs(n);
    return mpz_remove(tmp.get_mpz_t(), a.get_mpz_t(), ell.get_mpz_t());
}

// ---- criterion 1: height engine anchors ----
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream detail;

    HeightEstimate h2 = height(FieldElement::from_rational(Q(), Rat(2)), 30);
    if (h2.is_zero || std::abs(h2.value.to_double() - std::log(2.0)) > 1e-10) ok = false;

    HeightEstimate hi = height(FieldElement::generator(Qi()), 30);
    if (!hi.is_zero) ok = false;

    FieldPtr golden = NumberField::create(IntPoly::parse("x^2-x-1"));
    HeightEstimate hg = height(FieldElement::generator(golden), 30);
    double target = 0.5 * std::log((1.0 + std::sqrt(5.0)) / 2.0);
    if (hg.is_zero || std::abs(hg.value.to_double() - target) > 1e-10) ok = false;

    double ms = ms_since(t0);
    if (ms >= 1000) ok = false;
    detail << "h(2), h(i) exact-zero, h(golden ratio) all within 1e-10; runtime " << ms << " ms";
    record("1", ok, detail.str());
}

// ---- criterion 2: v_ell(disc(x^ell - alpha)) = ell for admissible alpha ----
void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    int cases = 0;
    for (long ellv : {3L, 5L, 7L}) {
        Int ell(ellv);
        for (long alpha = 2; alpha <= 50; ++alpha) {
            if (alpha % ellv == 0) continue;
            KummerAnalysis an = check_a1(Q(), FieldElement::from_rational(Q(), Rat(alpha)), ellv);
            if (an.conclusion != KummerConclusion::totally_ramified_all) continue;
            ++cases;
            Int disc = poly_discriminant(IntPoly::binomial(static_cast<unsigned>(ellv), alpha));
            if (v_ell(disc, ell) != static_cast<unsigned long>(ellv)) ok = false;
        }
    }
    double ms = ms_since(t0);
    if (ms >= 10000) ok = false;
    std::ostringstream detail;
    detail << cases << " admissible (ell, alpha) pairs with a(p) = 1, all with "
           << "v_ell(disc) = ell exactly; runtime " << ms << " ms";
    record("2", ok && cases > 50, detail.str());
}

// ---- criterion 3: divisibility conclusion under the acond hypothesis ----
void criterion3() {
    bool ok = true;
    int cases = 0;
    struct Rho {
        long num, den;
    };
    const Rho rhos[] = {{1, 2}, {2, 3}, {3, 4}};
    for (long ellv : {3L, 5L, 7L}) {
        for (const auto& r : rhos) {
            for (long alpha = 2; alpha <= 12 && cases < 20; ++alpha) {
                if (alpha % ellv == 0) continue;
                Rat rho(r.num, r.den);
                KummerAnalysis an;
                try {
                    an = check_acolem(Q(), FieldElement::from_rational(Q(), Rat(alpha)), ellv, rho);
                } catch (const Error&) {
                    continue;
                }
                if (an.conclusion != KummerConclusion::divides) continue;
                ++cases;
                Int disc = poly_discriminant(IntPoly::binomial(static_cast<unsigned>(ellv), alpha));
                if (static_cast<long>(v_ell(disc, ellv)) < an.divides_exponent) ok = false;
            }
        }
    }
    std::ostringstream detail;
    detail << cases << " (alpha, ell, rho) cases with the congruence condition satisfied, "
           << "all with v_ell(disc) >= ceil(rho*ell); zero violations";
    record("3", ok && cases >= 20, detail.str());
}

// ---- criterion 4: shortcut equals brute force ----
void criterion4() {
    bool ok = true;
    int cases = 0;
    // over Q at ell in {3,5,7}: direct residue search at a and a+1
    for (long ellv : {3L, 5L, 7L}) {
        auto rep = split_prime(Q(), ellv);
        for (long alpha = 2; alpha <= 30; ++alpha) {
            if (alpha % ellv == 0) continue;
            FieldElement a = FieldElement::from_rational(Q(), Rat(alpha));
            APrimeRecord rec = a_invariant(a, ellv, rep.factors[0]);
            if (!rec.shortcut) continue;
            double quotient = std::pow(static_cast<double>(ellv), rec.a + 1);
            if (quotient > 1e6) continue;
            ++cases;
            bool at_a = lth_power_solvable_mod_pk(a, ellv, rep.factors[0], rec.a);
            bool at_a1 = lth_power_solvable_mod_pk(a, ellv, rep.factors[0], rec.a + 1);
            if (!(at_a && !at_a1)) ok = false;
        }
    }
    // residue degree 2 instances over Q(i) at the inert prime 3
    {
        auto rep = split_prime(Qi(), 3);
        for (long alpha : {2L, 4L, 5L, 7L, 8L, 10L, 11L, 13L}) {
            FieldElement a = FieldElement::from_rational(Qi(), Rat(alpha));
            APrimeRecord rec = a_invariant(a, 3, rep.factors[0]);
            double quotient = std::pow(3.0, 2 * (rec.a + 1));
            if (quotient > 1e6) continue;
            ++cases;
            bool at_a = lth_power_solvable_mod_pk(a, 3, rep.factors[0], rec.a);
            bool at_a1 = lth_power_solvable_mod_pk(a, 3, rep.factors[0], rec.a + 1);
            if (!(at_a && !at_a1)) ok = false;
        }
    }
    std::ostringstream detail;
    detail << cases << " instances with quotient <= 10^6 (including residue degree 2): "
           << "shortcut and residue search agree everywhere";
    record("4", ok && cases >= 60, detail.str());
}

// ---- criterion 5: Silverman suite ----
void criterion5() {
    bool ok = true;
    int cases = 0;

    // the worked case: B = Q(sqrt 2) over M = Q
    {
        BoundExpr bound = silverman_bound(2, 2, 1, 8);
        double b = bound.evaluate(256).to_double();
        if (std::abs(b - std::pow(2.0, 0.125)) > 1e-12) ok = false;
        FieldPtr r2 = NumberField::create(IntPoly::parse("x^2-2"));
        double H = std::exp(height(FieldElement::generator(r2), 30).value.to_double());
        if (std::abs(H - std::sqrt(2.0)) > 1e-10) ok = false;
        if (H < b) ok = false;
        ++cases;
    }

    auto quad_disc = [](long m) {
        long mm = m % 4;
        if (mm < 0) mm += 4;
        return mm == 1 ? m : 4 * m;
    };
    auto squarefree_core = [](long n) {
        long core = n;
        for (long p = 2; p * p <= std::abs(core); ++p)
            while (core % (p * p) == 0) core /= p * p;
        return core;
    };

    std::mt19937_64 rng(2024);
    const long pool[] = {-1, 2,  3,  5,  -2, -3, 7,  6,   10, -5,
                         11, 13, -7, 15, -6, 14, 17, -10, 19, 21};

    // quadratic over Q: N(D) = |disc|, gamma = sqrt(n)
    while (cases < 50) {
        long n = pool[rng() % 20];
        if (n == 1) continue;
        Int norm(std::abs(quad_disc(n)));
        BoundExpr bound = silverman_bound(2, 2, 1, norm);
        FieldPtr F = NumberField::create(IntPoly({-n, 0, 1}));
        HeightEstimate h = height(FieldElement::generator(F), 30);
        double H = std::exp(h.is_zero ? 0.0 : h.value.to_double());
        if (H < bound.evaluate(256).to_double() - 1e-9) ok = false;
        ++cases;
    }

    // biquadratic over quadratic M: N(D_{B/M}) = |d1 d2 d3| / d1^2
    while (cases < 100) {
        long m = pool[rng() % 20], n = pool[rng() % 20];
        if (m == n) continue;
        long core = squarefree_core(m * n);
        if (core == 1) continue;
        Int discB = abs(Int(quad_disc(m)) * Int(quad_disc(n)) * Int(quad_disc(core)));
        Int dM2 = abs(Int(quad_disc(m)) * Int(quad_disc(m)));
        Int normBM, r;
        mpz_tdiv_qr(normBM.get_mpz_t(), r.get_mpz_t(), discB.get_mpz_t(), dM2.get_mpz_t());
        if (r != 0) continue;
        long deltaM = m > 0 ? 2 : 1;
        BoundExpr bound = silverman_bound(2, 4, deltaM, normBM);
        FieldPtr F = NumberField::create(IntPoly({-n, 0, 1}));
        HeightEstimate h = height(FieldElement::generator(F), 30);
        double H = std::exp(h.is_zero ? 0.0 : h.value.to_double());
        if (H < bound.evaluate(256).to_double() - 1e-9) ok = false;
        ++cases;
    }

    std::ostringstream detail;
    detail << cases << " instances satisfy the relative-discriminant lower bound "
           << "(worked case H(sqrt 2) >= 2^(1/8) included); zero violations";
    record("5", ok && cases >= 100, detail.str());
}

// ---- criterion 6: Garza suite ----
void criterion6() {
    bool ok = true;
    double constant = garza_bound(3, 3).evaluate(256).to_double();
    if (std::abs(constant - 1.272019649514069) > 1e-9) ok = false;

    std::mt19937_64 rng(2025);
    int cases = 0;
    while (cases < 100) {
        int deg = 2 + static_cast<int>(rng() % 5);
        IntPoly f = oracle::random_poly(rng, deg, 7, true);
        FieldPtr F;
        try {
            F = NumberField::create(f);
        } catch (const Error&) {
            continue;
        }
        if (F->real_places() < 1) continue;
        HeightEstimate h = height(FieldElement::generator(F), 30);
        double H = std::exp(h.is_zero ? 0.0 : h.value.to_double());
        double bound = garza_bound(F->degree(), F->real_places()).evaluate(256).to_double();
        if (H < bound - 1e-9) ok = false;
        ++cases;
    }
    std::ostringstream detail;
    detail << "totally real constant ((1+sqrt5)/2)^(1/2) reproduced to 1e-9; " << cases
           << " random elements with r >= 1 satisfy the bound";
    record("6", ok, detail.str());
}

// ---- criterion 7: Example 4.2 bound through the excess route ----
void criterion7() {
    bool ok = true;
    BoundExpr bound = tower_bound_42(7);
    double v = bound.evaluate(256).to_double();
    if (std::abs(v - std::pow(7.0 / 4.0, 0.25)) > 1e-9) ok = false;
    // the expression itself must carry the 2^(-1/2) * 7^(1/4) shape
    BoundExpr direct = BoundExpr::of(PowProduct::of(Int(2), Rat(-1, 2)) *
                                     PowProduct::of(Int(7), Rat(1, 4)));
    if (!bound.structurally_equal(direct)) ok = false;
    record("7", ok, "(7/4)^(1/4) = " + bound.evaluate(256).to_string(15) +
                        " derived via excess_discriminant + prefall_bound");
}

// ---- criterion 8: trinomial tower reproduction ----
void criterion8() {
    TowerStep step = trinomial_step({}, 12);

    Int b12, b11;
    mpz_ui_pow_ui(b12.get_mpz_t(), 12, 12);
    mpz_ui_pow_ui(b11.get_mpz_t(), 11, 11);
    Int stated = -(b12 + b11);
    Int computed = poly_discriminant(IntPoly::parse("x^12+x+1"));
    double numeric = oracle::disc_numeric(IntPoly::parse("x^12+x+1"));

    bool as_stated = (computed == stated);
    bool corrected = (computed == b12 - b11) && (step.disc == computed) &&
                     std::abs(numeric - computed.get_d()) / computed.get_d() < 1e-6;

    double h = std::stod(step.root_height);
    bool window = h > 0 && h <= std::log(2.0) / 11 + 1e-12;
    bool split_found = step.split_prime >= 2 && step.split_prime <= 1000000;

    std::ostringstream detail;
    detail << "disc clause as stated FAILS: resultant gives " << computed.get_str()
           << " = 12^12 - 11^11 (numeric root-product oracle agrees), not -(12^12+11^11) = "
           << stated.get_str() << " which is disc(x^12 - x - 1); "
           << "corrected identity holds: " << (corrected ? "yes" : "NO") << "; root height "
           << step.root_height << " in (0, log2/11]: " << (window ? "yes" : "NO")
           << "; split prime " << step.split_prime.get_str() << " found within 10^6: "
           << (split_found ? "yes" : "NO");
    // the expected state: everything except the as-stated clause holds
    if (!as_stated && corrected && window && split_found)
        detail << " [expected documented failure: disc clause only]";
    else if (!corrected || !window || !split_found)
        detail << " [UNEXPECTED failure beyond the documented clause]";
    record("8", as_stated && corrected && window && split_found, detail.str());
}

// ---- criterion 9: witness below 1e-6 at k = 20, engine cross-check ----
void criterion9() {
    bool ok = true;
    WitnessSequence seq = nonbog_witnesses(Rat(2), 4, 1e-6);
    if (seq.first_k_below != 20) ok = false;

    for (int k = 1; k <= 4; ++k) {
        unsigned n = 1u << k;
        FieldPtr F = NumberField::create(IntPoly::binomial(n, 2));
        HeightEstimate h = height(FieldElement::generator(F), 30);
        if (std::abs(h.value.to_double() - std::log(2.0) / n) > 1e-10) ok = false;
    }
    // the witness at k = 20 is strictly positive and below 1e-6
    double h20 = std::log(2.0) / std::pow(2.0, 20);
    record("9", ok && h20 > 0 && h20 < 1e-6,
           "first witness below 1e-6 at k = 20; formula matches the height engine on the "
           "k <= 4 root representations to 1e-10");
}

// ---- criterion 10: end-to-end certificates + soundness sweep ----

// sweep gamma = u + w * beta over the rationals with |num|, den <= 9; heights
// from the primitive minimal polynomial of beta (certified irreducible by the
// total-ramification chain), reusing one set of isolated roots
bool sweep_no_height_below(const IntPoly& beta_minpoly, double log_eps, double* min_seen) {
    IsolatedRoots iso = isolate_roots(beta_minpoly, 25);
    int deg = beta_minpoly.degree();
    std::set<Rat> values;
    for (long num = -9; num <= 9; ++num)
        for (long den = 1; den <= 9; ++den) {
            Rat q(num, den);
            q.canonicalize();
            values.insert(q);
        }
    double min_h = 1e9;
    for (const Rat& u : values)
        for (const Rat& w : values) {
            if (w == 0) continue;
            IntPoly g = compose_affine(beta_minpoly, u, w);
            MahlerLog ml = mahler_log_affine(g, iso, u, w);
            double h = ml.value.to_double() / deg;
            double err = ml.error.to_double() / deg;
            min_h = std::min(min_h, h);
            if (h + err < log_eps) return false;
        }
    *min_seen = min_h;
    return true;
}

void criterion10() {
    bool ok = true;
    std::ostringstream detail;

    // F = Q(i), ell = 5, rho = 1 < d = 2: epsilon = 5^(1/16)
    AlphaConstruction ci = construct_alpha(Qi(), 5);
    for (const auto& [P, w] : ci.verification)
        if (w != 1) ok = false;
    if (ci.verification.size() != 2) ok = false;
    Certificate cert_qi5 = finram_certificate(Qi(), ci.alpha, 5, Rat(1), "declared rho = 1",
                                              {"no prime over 5 ramifies in the tower"});
    if (!cert_qi5.epsilon.structurally_equal(BoundExpr::of(PowProduct::of(Int(5), Rat(1, 16)))))
        ok = false;

    // F = Q, rho = d = 1: theta-optimized epsilon > 1, matching a 10^4 grid
    AlphaConstruction cq5 = construct_alpha(Q(), 5);
    Certificate cert_q5 = finram_certificate(Q(), cq5.alpha, 5, Rat(1), "rho = d = 1",
                                             {"no prime over 5 ramifies in the tower"});
    double eps_q5 = cert_q5.epsilon.evaluate(256).to_double();
    if (!(eps_q5 > 1.0)) ok = false;
    {
        const long ell = 5;
        double lo = (2.0 * ell - 1) / (2.0 * ell);
        double best = 0;
        for (int i = 1; i < 10000; ++i) {
            double theta = lo + i * (1.0 - lo) / 10000;
            double a = std::pow(static_cast<double>(ell), (1 - theta) / (2 * (ell - 1)));
            double phi = 2 * theta - 1 - static_cast<double>(ell - 1) / ell;
            double b = std::pow(
                std::pow(2.0, -1 / phi) + std::sqrt(1 + std::pow(4.0, -1 / phi)), phi / 2);
            best = std::max(best, std::min(a, b));
        }
        if (std::abs(eps_q5 - best) > 1e-6) ok = false;
    }

    // soundness sweeps across the four desk certificates
    struct SweepCase {
        const char* label;
        IntPoly minpoly;
        double log_eps;
    };
    AlphaConstruction cq3 = construct_alpha(Q(), 3);
    AlphaConstruction ci3 = construct_alpha(Qi(), 3);
    Certificate cert_q3 = finram_certificate(Q(), cq3.alpha, 3, Rat(1), "rho = d = 1",
                                             {"no prime over 3 ramifies in the tower"});
    Certificate cert_qi3 = finram_certificate(Qi(), ci3.alpha, 3, Rat(1), "declared rho = 1",
                                              {"no prime over 3 ramifies in the tower"});

    std::vector<SweepCase> sweeps;
    // beta = alpha^(1/ell): over Q the minimal polynomial is x^ell - alpha;
    // over Q(i) it is the degree-2ell norm form (x^ell - alpha)(x^ell - conj)
    {
        Rat a5 = cq5.alpha.rational_value();
        sweeps.push_back({"Q, ell=5", IntPoly::binomial(5, Int(a5.get_num())),
                          std::log(cert_q5.epsilon.evaluate(256).to_double())});
        Rat a3 = cq3.alpha.rational_value();
        sweeps.push_back({"Q, ell=3", IntPoly::binomial(3, Int(a3.get_num())),
                          std::log(cert_q3.epsilon.evaluate(256).to_double())});
    }
    {
        // trace and norm of the Gaussian alpha for ell = 5
        const auto& co = ci.alpha.coords();
        Rat tr = co[0] * 2;
        Rat nm = co[0] * co[0] + co[1] * co[1];
        std::vector<Int> c(11, Int(0));
        c[10] = 1;
        c[5] = Int(-tr.get_num());
        c[0] = Int(nm.get_num());
        sweeps.push_back({"Q(i), ell=5", IntPoly(std::move(c)),
                          std::log(cert_qi5.epsilon.evaluate(256).to_double())});
    }
    {
        // alpha over Q(i) at the inert prime 3 is rational: x^3 - alpha
        Rat a = ci3.alpha.rational_value();
        sweeps.push_back({"Q(i), ell=3", IntPoly::binomial(3, Int(a.get_num())),
                          std::log(cert_qi3.epsilon.evaluate(256).to_double())});
    }

    std::ostringstream sweep_note;
    for (const auto& sc : sweeps) {
        double min_seen = 0;
        bool clean = sweep_no_height_below(sc.minpoly, sc.log_eps, &min_seen);
        if (!clean) ok = false;
        sweep_note << " [" << sc.label << ": min h = " << min_seen
                   << " >= log eps = " << sc.log_eps << "]";
    }

    detail << "construct_alpha verified at both primes over 5 in Q(i); epsilon = 5^(1/16); "
           << "theta branch matches the 10^4 grid to 1e-6; sweeps over u + w*alpha^(1/ell) "
           << "with |num|, den <= 9 find no height below epsilon:" << sweep_note.str();
    record("10", ok, detail.str());
}

// ---- criterion 11: byte-identical reruns of job files ----
std::string run_cli_capture(const std::string& cli, const std::string& args, int* exit_code) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    *exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

void criterion11() {
    const char* cli = std::getenv("BOGOCERT_CLI");
    const char* tmp = std::getenv("BOGOCERT_TMP");
    if (!cli) {
        record("11", false, "BOGOCERT_CLI not set; cannot exercise the binary");
        return;
    }
    std::string dir = tmp ? tmp : "/tmp";
    bool ok = true;
    std::vector<std::pair<std::string, std::string>> jobs = {
        {"acc_job_height.txt", "command height\nfield x^2-x-1\nelem 0,1\n"},
        {"acc_job_cert.txt",
         "command certify\nfield x^2+1\nell 5\nrho 1/1\nattest no prime over 5 ramifies\n"},
        {"acc_job_wit.txt", "command witnesses\nb 2\nkmax 8\nformat csv\n"},
        {"acc_job_split.txt", "command split\nfield x^12+x+1\nell 19\nformat json\n"},
    };
    for (const auto& [name, content] : jobs) {
        std::string path = dir + "/" + name;
        std::ofstream f(path);
        f << content;
        f.close();
        int c1 = 0, c2 = 0;
        std::string o1 = run_cli_capture(cli, "run " + path, &c1);
        std::string o2 = run_cli_capture(cli, "run " + path, &c2);
        if (c1 != 0 || c2 != 0 || o1 != o2 || o1.empty()) ok = false;
    }
    record("11", ok, "4 job files re-run byte-identically through the CLI");
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();

    int passed = 0;
    std::vector<std::string> failed;
    for (const auto& c : g_results) {
        if (c.pass)
            ++passed;
        else
            failed.push_back(c.name);
    }
    bool only_documented = failed.size() == 1 && failed[0] == "8" &&
                           g_results[7].detail.find("[expected documented failure") !=
                               std::string::npos;
    std::printf("summary: %d/%zu criteria pass", passed, g_results.size());
    if (only_documented)
        std::printf("; criterion 8's disc-identity clause fails as documented (all other "
                    "clauses of criterion 8 hold)\n");
    else
        std::printf("\n");
    return (passed == static_cast<int>(g_results.size()) || only_documented) ? 0 : 1;
}
