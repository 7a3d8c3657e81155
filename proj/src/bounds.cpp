#include "bogocert/bounds.hpp"

#include "bogocert/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace bogocert {

namespace {
const char* kModule = "bounds";
using ordered_json = nlohmann::ordered_json;

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw_parse(kModule, "bad rational '" + s + "'");
    q.canonicalize();
    return q;
}
} // namespace

BoundExpr silverman_bound(long s, long d_abs, long delta_M, const Int& norm_rel_disc) {
    if (s < 2) throw_domain(kModule, "silverman bound needs [B:M] >= 2");
    if (delta_M < 1) throw_domain(kModule, "delta(M) must be >= 1");
    if (norm_rel_disc < 1) throw_domain(kModule, "discriminant norm must be >= 1");
    Rat e1(-delta_M, 2 * d_abs * (s - 1));
    e1.canonicalize();
    Rat e2(1, 2 * d_abs * s * (s - 1));
    e2.canonicalize();
    return BoundExpr::of(PowProduct::of(Int(s), e1) * PowProduct::of(norm_rel_disc, e2));
}

BoundExpr garza_bound(long d, long r) {
    if (r < 1) throw_domain(kModule, "garza bound needs at least one real place");
    if (r > d) throw_domain(kModule, "r cannot exceed the degree");
    Rat ratio(r, d);
    ratio.canonicalize();
    return BoundExpr::garza(ratio);
}

ExcessValue excess_discriminant(const ExcessInput& input) {
    if (input.s < 2) throw_domain(kModule, "[C:F] must be >= 2");
    if (input.norm_DC < 1) throw_domain(kModule, "norm of D_{C/F} must be >= 1");
    ExcessValue out;
    if (input.disjoint) {
        out.value = PowProduct::of(input.norm_DC, Rat(1));
        out.certified_lower = true;
        return out;
    }
    if (input.family.empty())
        throw_domain(kModule, "finite-family evidence needs at least one entry");

    // prime factorization of norm_DC
    std::vector<std::pair<Int, unsigned long>> primes;
    {
        Int rest = input.norm_DC;
        Int p = 1;
        while (rest > 1) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            if (!mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
                if (p * p > rest) {
                    primes.emplace_back(rest, 1);
                    break;
                }
                continue;
            }
            unsigned long m = 0;
            while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
                rest /= p;
                ++m;
            }
            primes.emplace_back(p, m);
        }
    }

    bool first = true;
    PowProduct best;
    for (const auto& entry : input.family) {
        if (entry.e < 1) throw_domain(kModule, "family entry needs e >= 1");
        if (entry.norm_DM < 1) throw_domain(kModule, "family entry norm must be >= 1");
        PowProduct candidate;
        for (const auto& [p, vDC] : primes) {
            Int dm = entry.norm_DM;
            Int tmp;
            unsigned long vDM = mpz_remove(tmp.get_mpz_t(), dm.get_mpz_t(), p.get_mpz_t());
            long surplus = static_cast<long>(entry.e) * static_cast<long>(vDC) -
                           static_cast<long>(input.s) * static_cast<long>(vDM);
            if (surplus <= 0) continue;
            Rat expo(surplus, entry.e);
            expo.canonicalize();
            candidate = candidate * PowProduct::of(p, expo);
        }
        if (first || PowProduct::compare(candidate, best) < 0) best = candidate;
        first = false;
    }
    out.value = best;
    out.certified_lower = false; // upper bound on the infimum
    return out;
}

RelboResult relbocrit_bound(long d, const Rat& rho, const std::vector<SubextDatum>& data) {
    if (data.empty()) throw_domain(kModule, "no subextension data");
    if (rho < Rat(d, 2) || rho > Rat(d))
        throw_domain(kModule, "rho must lie in [d/2, d]");
    RelboResult out;
    out.pass = true;
    std::vector<BoundExpr> parts;
    for (const auto& datum : data) {
        if (datum.s < 2) throw_domain(kModule, "subextension degree must be >= 2");
        Rat rs = rho * Rat(datum.s);
        PowProduct threshold = PowProduct::of(Int(datum.s), rs);
        if (PowProduct::compare(datum.excess, threshold) <= 0) out.pass = false;
        Rat e(1, 2 * d * datum.s * (datum.s - 1));
        e.canonicalize();
        parts.push_back(BoundExpr::of((datum.excess * threshold.pow(Rat(-1))).pow(e)));
    }
    if (parts.size() == 1) {
        out.bound = parts[0];
    } else {
        // order-stable minimum
        out.bound = BoundExpr::min_of(std::move(parts));
    }
    return out;
}

BoundExpr prefall_bound(long s, long d, const Rat& rho_MF, const PowProduct& excess) {
    if (s < 2) throw_domain(kModule, "prefall bound needs s >= 2");
    if (d < 1) throw_domain(kModule, "d must be >= 1");
    Rat e1 = -rho_MF / Rat(2 * d * (s - 1));
    Rat e2(1, 2 * d * s * (s - 1));
    e2.canonicalize();
    return BoundExpr::of(PowProduct::of(Int(s), e1) * excess.pow(e2));
}

namespace {

Real nonarch_branch(long ell, const Real& theta, mpfr_prec_t prec) {
    Real expo = (Real::of(1L, prec) - theta) /
                Real::of(2 * (ell - 1), prec);
    return pow(Real::of(ell, prec), expo);
}

Real arch_branch(long ell, const Real& theta, mpfr_prec_t prec) {
    Real phi = Real::of(2L, prec) * theta - Real::of(1L, prec) -
               Real::of(ell - 1, prec) / Real::of(ell, prec);
    if (!(phi > Real::of(0L, prec))) return Real::of(0L, prec);
    Real inv = Real::of(1L, prec) / phi;
    Real a = pow(Real::of(2L, prec), -inv);
    Real b = sqrt(Real::of(1L, prec) + pow(Real::of(4L, prec), -inv));
    return pow(a + b, phi / Real::of(2L, prec));
}

} // namespace

ThetaSplit optimize_theta(long ell) {
    if (ell < 2) throw_domain(kModule, "ell must be prime");
    const mpfr_prec_t prec = 192;
    Real lo = Real::of(2 * ell - 1, prec) / Real::of(2 * ell, prec);
    Real hi = Real::of(1L, prec);
    // golden-section maximization of the unimodal min of the two branches
    Real gr = (sqrt(Real::of(5L, prec)) - Real::of(1L, prec)) / Real::of(2L, prec);
    Real a = lo + (hi - lo) * two_pow(-20, prec);
    Real b = hi - (hi - lo) * two_pow(-20, prec);
    Real x1 = b - gr * (b - a);
    Real x2 = a + gr * (b - a);
    auto objective = [&](const Real& th) {
        return min(nonarch_branch(ell, th, prec), arch_branch(ell, th, prec));
    };
    Real f1 = objective(x1), f2 = objective(x2);
    for (int it = 0; it < 220; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = objective(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = objective(x1);
        }
    }
    Real theta_star = (a + b) / Real::of(2L, prec);

    // freeze theta as an exact rational with denominator 10^15
    Int den("1000000000000000");
    Real scaled = theta_star * Real::of(den, prec);
    Int num;
    mpfr_get_z(num.get_mpz_t(), scaled.get(), MPFR_RNDN);
    Rat theta(num, den);
    theta.canonicalize();

    ThetaSplit split;
    split.theta = theta;
    Rat expo = (Rat(1) - theta) / Rat(2 * (ell - 1));
    split.nonarch = BoundExpr::of(PowProduct::of(Int(ell), expo));
    Rat phi = Rat(2) * theta - Rat(1) - Rat(ell - 1, ell);
    if (phi <= 0) throw_internal(kModule, "theta optimization left the admissible range");
    split.arch = BoundExpr::garza(phi);
    split.combined = BoundExpr::min_of({split.nonarch, split.arch});
    return split;
}

Certificate finram_certificate(const FieldPtr& F, const FieldElement& alpha, const Int& ell,
                               const Rat& rho, const std::string& rho_provenance,
                               const std::vector<std::string>& attestations) {
    int d = F->degree();
    if (rho < Rat(d, 2) || rho > Rat(d))
        throw_domain(kModule, "declared rho must lie in [d/2, d]");
    if (attestations.empty())
        throw_domain(kModule,
                     "an attestation that no prime of the base field over ell ramifies in the "
                     "tower is required");

    KummerAnalysis an = check_a1(F, alpha, ell);
    if (an.conclusion != KummerConclusion::totally_ramified_all)
        throw_domain(kModule,
                     "certification failed: v_p(alpha^(ell^f - 1) - 1) = 1 does not hold at every "
                     "prime over ell");

    Certificate cert;
    cert.field_minpoly = F->serialize();
    cert.degree = d;
    cert.signature_r = F->real_places();
    cert.signature_rp = F->complex_pairs();
    cert.ell = ell;
    cert.alpha_coords = alpha.serialize();
    cert.rho = rho;
    cert.rho_provenance = rho_provenance;
    cert.assumptions = attestations;
    cert.irreducible_certified = an.irreducible_certified;
    for (const auto& rec : an.primes) {
        Certificate::PrimeRecord pr;
        pr.g = rec.P.residue_factor.serialize();
        pr.e = rec.P.e;
        pr.f = rec.P.f;
        pr.a = rec.a;
        pr.w = rec.w;
        pr.shortcut = rec.shortcut;
        cert.primes.push_back(std::move(pr));
    }

    long ell_l = ell.get_si();
    if (rho < Rat(d)) {
        cert.branch = "nonbound";
        Rat expo = (Rat(d) - rho) / Rat(2 * d * (ell_l - 1));
        cert.epsilon = BoundExpr::of(PowProduct::of(ell, expo));
    } else {
        cert.branch = "archbound";
        ThetaSplit split = optimize_theta(ell_l);
        cert.theta = split.theta;
        cert.epsilon = split.combined;
    }

    const mpfr_prec_t prec = 256;
    Real value = cert.epsilon.evaluate(prec);
    if (!(value > Real::of(1L, prec)))
        throw_internal(kModule, "epsilon did not come out above 1");
    cert.epsilon_decimal = value.to_string(15);
    return cert;
}

namespace {

ordered_json expr_to_json(const BoundExpr& e) {
    ordered_json j;
    switch (e.kind()) {
        case BoundExpr::Kind::product: {
            j["type"] = "product";
            ordered_json arr = ordered_json::array();
            for (const auto& [b, ex] : e.product().factors()) {
                ordered_json f;
                f["base"] = b.get_str();
                f["exp"] = ex.get_str();
                arr.push_back(std::move(f));
            }
            j["factors"] = std::move(arr);
            break;
        }
        case BoundExpr::Kind::garza:
            j["type"] = "garza";
            j["ratio"] = e.garza_ratio().get_str();
            break;
        case BoundExpr::Kind::min_of: {
            j["type"] = "min";
            ordered_json arr = ordered_json::array();
            for (const auto& part : e.parts()) arr.push_back(expr_to_json(part));
            j["parts"] = std::move(arr);
            break;
        }
    }
    return j;
}

BoundExpr expr_from_json(const ordered_json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "product") {
        PowProduct p;
        for (const auto& f : j.at("factors")) {
            Int base(f.at("base").get<std::string>());
            Rat expo = rat_from_string(f.at("exp").get<std::string>());
            p = p * PowProduct::of(base, expo);
        }
        return BoundExpr::of(std::move(p));
    }
    if (type == "garza") return BoundExpr::garza(rat_from_string(j.at("ratio").get<std::string>()));
    if (type == "min") {
        std::vector<BoundExpr> parts;
        for (const auto& part : j.at("parts")) parts.push_back(expr_from_json(part));
        return BoundExpr::min_of(std::move(parts));
    }
    throw_parse(kModule, "unknown expression type '" + type + "'");
}

} // namespace

std::string certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["kind"] = "height-gap-certificate";
    j["version"] = 1;
    j["field"]["minpoly"] = cert.field_minpoly;
    j["field"]["degree"] = cert.degree;
    j["field"]["signature"] = {cert.signature_r, cert.signature_rp};
    j["ell"] = cert.ell.get_str();
    j["alpha"] = cert.alpha_coords;
    j["rho"]["value"] = cert.rho.get_str();
    j["rho"]["provenance"] = cert.rho_provenance;
    j["assumptions"] = cert.assumptions;
    ordered_json primes = ordered_json::array();
    for (const auto& pr : cert.primes) {
        ordered_json p;
        p["g"] = pr.g;
        p["e"] = pr.e;
        p["f"] = pr.f;
        p["a"] = pr.a;
        p["w"] = pr.w;
        p["branch"] = pr.shortcut ? "valuation-shortcut" : "brute-force";
        primes.push_back(std::move(p));
    }
    j["kummer"]["conclusion"] = "totally_ramified_all";
    j["kummer"]["irreducible_certified"] = cert.irreducible_certified;
    j["kummer"]["primes"] = std::move(primes);
    j["branch"] = cert.branch;
    if (cert.theta)
        j["theta"] = cert.theta->get_str();
    else
        j["theta"] = nullptr;
    j["epsilon"]["expression"] = expr_to_json(cert.epsilon);
    j["epsilon"]["decimal"] = cert.epsilon_decimal;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw_parse(kModule, std::string("bad certificate JSON: ") + e.what());
    }
    Certificate cert;
    try {
        cert.field_minpoly = j.at("field").at("minpoly").get<std::vector<std::string>>();
        cert.degree = j.at("field").at("degree").get<int>();
        cert.signature_r = j.at("field").at("signature")[0].get<int>();
        cert.signature_rp = j.at("field").at("signature")[1].get<int>();
        cert.ell = Int(j.at("ell").get<std::string>());
        cert.alpha_coords = j.at("alpha").get<std::vector<std::string>>();
        cert.rho = rat_from_string(j.at("rho").at("value").get<std::string>());
        cert.rho_provenance = j.at("rho").at("provenance").get<std::string>();
        cert.assumptions = j.at("assumptions").get<std::vector<std::string>>();
        for (const auto& p : j.at("kummer").at("primes")) {
            Certificate::PrimeRecord pr;
            pr.g = p.at("g").get<std::vector<std::string>>();
            pr.e = p.at("e").get<int>();
            pr.f = p.at("f").get<int>();
            pr.a = p.at("a").get<int>();
            pr.w = p.at("w").get<int>();
            pr.shortcut = p.at("branch").get<std::string>() == "valuation-shortcut";
            cert.primes.push_back(std::move(pr));
        }
        cert.irreducible_certified = j.at("kummer").at("irreducible_certified").get<bool>();
        cert.branch = j.at("branch").get<std::string>();
        if (!j.at("theta").is_null()) cert.theta = rat_from_string(j.at("theta").get<std::string>());
        cert.epsilon = expr_from_json(j.at("epsilon").at("expression"));
        cert.epsilon_decimal = j.at("epsilon").at("decimal").get<std::string>();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw_parse(kModule, std::string("certificate fields missing or malformed: ") + e.what());
    }
    return cert;
}

VerifyResult verify_certificate(const std::string& json_text) {
    Certificate cert = certificate_from_json(json_text);
    VerifyResult out;

    FieldPtr F = NumberField::create(IntPoly::deserialize(cert.field_minpoly));
    FieldElement alpha = FieldElement::deserialize(F, cert.alpha_coords);
    Certificate fresh = finram_certificate(F, alpha, cert.ell, cert.rho, cert.rho_provenance,
                                           cert.assumptions);

    if (!fresh.epsilon.structurally_equal(cert.epsilon)) {
        out.detail = "bound expression mismatch: recomputed " + fresh.epsilon.to_string() +
                     " vs recorded " + cert.epsilon.to_string();
        return out;
    }
    const mpfr_prec_t prec = 256;
    Real recorded = Real::of(cert.epsilon_decimal, prec);
    Real recomputed = cert.epsilon.evaluate(prec);
    Real tol = Real::of(1e-12, prec);
    if (!(abs(recorded - recomputed) < tol)) {
        out.detail = "decimal mismatch beyond 1e-12";
        return out;
    }
    if (fresh.branch != cert.branch) {
        out.detail = "branch mismatch";
        return out;
    }
    out.ok = true;
    out.detail = "certificate re-derived: epsilon = " + cert.epsilon_decimal;
    return out;
}

} // namespace bogocert
