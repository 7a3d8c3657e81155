#include "bogocert/jobs.hpp"

#include "bogocert/bounds.hpp"
#include "bogocert/constructor.hpp"
#include "bogocert/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <future>
#include <sstream>

namespace bogocert {

namespace {
const char* kModule = "cli";
using ordered_json = nlohmann::ordered_json;

int exit_code_for(ErrorCategory cat) {
    switch (cat) {
        case ErrorCategory::parse: return 2;
        case ErrorCategory::domain: return 3;
        case ErrorCategory::io: return 4;
        case ErrorCategory::limit: return 5;
        case ErrorCategory::internal: return 5;
    }
    return 5;
}

IntPoly parse_field_poly(const std::string& text) {
    if (text.find('x') != std::string::npos || text.find('X') != std::string::npos)
        return IntPoly::parse(text);
    // comma-separated coefficients, constant first
    std::vector<std::string> coeffs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(tok);
    return IntPoly::deserialize(coeffs);
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw_parse(kModule, "bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (...) {
        throw_parse(kModule, "bad integer '" + s + "'");
    }
}

long parse_digits(const JobSpec& job) {
    long digits = job.get_long("digits", 30);
    if (digits < 10 || digits > 200) throw_domain(kModule, "digits must lie in [10, 200]");
    return digits;
}

std::string format_of(const JobSpec& job) {
    std::string fmt = job.get("format", "text");
    if (fmt != "text" && fmt != "json" && fmt != "csv")
        throw_parse(kModule, "format must be text, json or csv");
    return fmt;
}

// ---- per-command handlers (each appends to an output stream) ----

void cmd_height(const JobSpec& job, std::ostream& os) {
    FieldPtr F = NumberField::create(parse_field_poly(job.require("field")));
    FieldElement beta = FieldElement::deserialize(F, split_commas(job.require("elem")));
    long digits = parse_digits(job);
    HeightEstimate h = height(beta, digits);
    std::string fmt = format_of(job);
    if (fmt == "json") {
        ordered_json j;
        j["exact_zero"] = h.is_zero;
        j["value"] = h.is_zero ? "0" : h.value.to_string(15);
        j["error_bound"] = h.is_zero ? "0" : h.error_bound.to_string(3);
        os << j.dump(2) << "\n";
    } else {
        if (h.is_zero)
            os << "height exact_zero=true value=0\n";
        else
            os << "height exact_zero=false value=" << h.value.to_string(15) << " +/- "
               << h.error_bound.to_string(3) << "\n";
    }
}

void cmd_split(const JobSpec& job, std::ostream& os) {
    FieldPtr F = NumberField::create(parse_field_poly(job.require("field")));
    Int ell = parse_int(job.require("ell"));
    SplittingReport report = split_prime(F, ell);
    std::string fmt = format_of(job);
    if (fmt == "json") {
        ordered_json j;
        j["ell"] = ell.get_str();
        j["dedekind_ok"] = report.dedekind_ok;
        ordered_json arr = ordered_json::array();
        for (const auto& P : report.factors) {
            ordered_json p;
            p["g"] = P.residue_factor.serialize();
            p["e"] = P.e;
            p["f"] = P.f;
            arr.push_back(std::move(p));
        }
        j["factors"] = std::move(arr);
        os << j.dump(2) << "\n";
    } else {
        os << report.to_text();
    }
}

void cmd_kummer(const JobSpec& job, std::ostream& os) {
    FieldPtr F = NumberField::create(parse_field_poly(job.require("field")));
    FieldElement alpha = FieldElement::deserialize(F, split_commas(job.require("elem")));
    Int ell = parse_int(job.require("ell"));

    KummerAnalysis an;
    if (job.has("rho")) {
        an = check_acolem(F, alpha, ell, parse_rat(job.get("rho")));
    } else {
        an = check_a1(F, alpha, ell);
    }
    std::string conclusion = an.conclusion == KummerConclusion::totally_ramified_all
                                 ? "totally_ramified_all"
                                 : (an.conclusion == KummerConclusion::divides ? "divides"
                                                                               : "inconclusive");
    std::string fmt = format_of(job);
    if (fmt == "json") {
        ordered_json j;
        j["ell"] = ell.get_str();
        j["conclusion"] = conclusion;
        j["divides_exponent"] = an.divides_exponent;
        j["irreducible_certified"] = an.irreducible_certified;
        ordered_json arr = ordered_json::array();
        for (const auto& rec : an.primes) {
            ordered_json p;
            p["g"] = rec.P.residue_factor.serialize();
            p["e"] = rec.P.e;
            p["f"] = rec.P.f;
            p["a"] = rec.a;
            p["w"] = rec.w;
            p["branch"] = rec.shortcut ? "valuation-shortcut" : "brute-force";
            arr.push_back(std::move(p));
        }
        j["primes"] = std::move(arr);
        os << j.dump(2) << "\n";
    } else {
        os << "ell " << ell.get_str() << "\n";
        os << "conclusion " << conclusion << "\n";
        if (an.conclusion != KummerConclusion::inconclusive)
            os << "divides ell^" << an.divides_exponent << "\n";
        os << "irreducible_certified " << (an.irreducible_certified ? "true" : "false") << "\n";
        for (const auto& rec : an.primes)
            os << "prime f=" << rec.P.f << " e=" << rec.P.e << " a=" << rec.a << " w=" << rec.w
               << " branch=" << (rec.shortcut ? "valuation-shortcut" : "brute-force") << "\n";
    }
}

void cmd_construct(const JobSpec& job, std::ostream& os) {
    FieldPtr F = NumberField::create(parse_field_poly(job.require("field")));
    Int ell = parse_int(job.require("ell"));
    AlphaConstruction c = construct_alpha(F, ell);
    std::string fmt = format_of(job);
    if (fmt == "json") {
        ordered_json j;
        j["ell"] = ell.get_str();
        j["alpha"] = c.alpha.serialize();
        ordered_json arr = ordered_json::array();
        for (const auto& [P, w] : c.verification) {
            ordered_json p;
            p["g"] = P.residue_factor.serialize();
            p["f"] = P.f;
            p["w"] = w;
            arr.push_back(std::move(p));
        }
        j["verification"] = std::move(arr);
        os << j.dump(2) << "\n";
    } else {
        os << "alpha ";
        auto s = c.alpha.serialize();
        for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
        os << "\n";
        for (const auto& [P, w] : c.verification)
            os << "prime f=" << P.f << " w=" << w << "\n";
    }
}

void cmd_certify(const JobSpec& job, std::ostream& os) {
    FieldPtr F = NumberField::create(parse_field_poly(job.require("field")));
    Int ell = parse_int(job.require("ell"));
    Rat rho = parse_rat(job.require("rho"));
    std::string attest = job.require("attest");

    FieldElement alpha = job.has("elem")
                             ? FieldElement::deserialize(F, split_commas(job.get("elem")))
                             : construct_alpha(F, ell).alpha;
    Certificate cert =
        finram_certificate(F, alpha, ell, rho, job.get("rho-provenance", "declared"), {attest});
    os << certificate_to_json(cert);
}

void cmd_verify(const JobSpec& job, std::ostream& os, int& exit_code) {
    std::string path = job.require("in");
    std::ifstream in(path);
    if (!in) throw_io(kModule, "cannot read certificate file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    VerifyResult vr = verify_certificate(buf.str());
    os << (vr.ok ? "valid " : "INVALID ") << vr.detail << "\n";
    if (!vr.ok) exit_code = 1;
}

void cmd_witnesses(const JobSpec& job, std::ostream& os) {
    Rat b = parse_rat(job.require("b"));
    long kmax = job.get_long("kmax", 8);
    double eps = 0;
    if (job.has("eps")) eps = std::stod(job.get("eps"));
    WitnessSequence seq = nonbog_witnesses(b, static_cast<int>(kmax), eps);
    std::string fmt = format_of(job);
    if (fmt == "csv") {
        os << "k,x,height\n";
        for (const auto& item : seq.items)
            os << item.k << "," << item.x.get_str() << "," << item.decimal << "\n";
    } else if (fmt == "json") {
        ordered_json j;
        j["description"] = seq.description;
        j["first_k_below"] = seq.first_k_below;
        ordered_json arr = ordered_json::array();
        for (const auto& item : seq.items) {
            ordered_json it;
            it["k"] = item.k;
            it["x"] = item.x.get_str();
            it["formula"] = item.formula;
            it["height"] = item.decimal;
            it["below_target"] = item.below_target;
            arr.push_back(std::move(it));
        }
        j["items"] = std::move(arr);
        os << j.dump(2) << "\n";
    } else {
        os << seq.description << "\n";
        for (const auto& item : seq.items)
            os << "k=" << item.k << " x=" << item.x.get_str() << " h=" << item.formula << " = "
               << item.decimal << (item.below_target ? " (below target)" : "") << "\n";
        if (seq.first_k_below >= 0) os << "first k below target: " << seq.first_k_below << "\n";
    }
}

void cmd_tower(const JobSpec& job, std::ostream& os) {
    long steps = job.get_long("steps", 1);
    long bstart = job.get_long("bstart", 12);
    if (steps < 1 || steps > 8) throw_domain(kModule, "steps must lie in [1, 8]");
    std::vector<TowerStep> tower;
    long b = bstart;
    while (static_cast<long>(tower.size()) < steps) {
        try {
            tower.push_back(trinomial_step(tower, b));
        } catch (const Error& e) {
            if (e.category() != ErrorCategory::domain) throw;
            // candidate rejected (shared primes); move to the next multiple of 12
        }
        b += 12;
        if (b > bstart + 12 * 200) throw_limit(kModule, "tower candidate search exhausted");
    }
    std::string fmt = format_of(job);
    if (fmt == "csv") {
        os << "index,b,disc,split_prime,height_upper,root_height\n";
        for (const auto& s : tower)
            os << s.index << "," << s.b << "," << s.disc.get_str() << ","
               << s.split_prime.get_str() << "," << s.height_upper << "," << s.root_height << "\n";
    } else if (fmt == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& s : tower) {
            ordered_json j;
            j["index"] = s.index;
            j["b"] = s.b;
            j["disc"] = s.disc.get_str();
            j["split_prime"] = s.split_prime.get_str();
            j["height_upper"] = s.height_upper;
            j["root_height"] = s.root_height;
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << "\n";
    } else {
        for (const auto& s : tower)
            os << "step " << s.index << ": b=" << s.b << " disc=" << s.disc.get_str()
               << " split_prime=" << s.split_prime.get_str() << " h_root=" << s.root_height
               << " <= " << s.height_upper << "\n";
    }
}

void cmd_bounds(const JobSpec& job, std::ostream& os) {
    std::string op = job.require("op");
    const mpfr_prec_t prec = 256;
    if (op == "silverman") {
        BoundExpr bexpr = silverman_bound(job.get_long("s", 2), job.get_long("dabs", 2),
                                          job.get_long("delta", 1), parse_int(job.require("norm")));
        os << "silverman " << bexpr.to_string() << " = " << bexpr.evaluate(prec).to_string(15)
           << "\n";
    } else if (op == "garza") {
        BoundExpr bexpr = garza_bound(job.get_long("d", 1), job.get_long("r", 1));
        os << "garza " << bexpr.to_string() << " = " << bexpr.evaluate(prec).to_string(15) << "\n";
    } else if (op == "prefall") {
        ExcessInput in;
        in.norm_DC = parse_int(job.require("normdc"));
        in.s = job.get_long("s", 2);
        in.disjoint = job.get("evidence", "disjoint") == "disjoint";
        if (!in.disjoint) {
            for (const auto& part : split_commas(job.require("family"))) {
                auto colon = part.find(':');
                if (colon == std::string::npos)
                    throw_parse(kModule, "family entries look like e:norm");
                FamilyEntry fe;
                fe.e = std::stol(part.substr(0, colon));
                fe.norm_DM = parse_int(part.substr(colon + 1));
                in.family.push_back(fe);
            }
        }
        ExcessValue ev = excess_discriminant(in);
        BoundExpr bexpr = prefall_bound(in.s, job.get_long("d", 1),
                                        parse_rat(job.get("rho", "1")), ev.value);
        os << "excess " << ev.value.to_string()
           << (ev.certified_lower ? " (certified lower bound)" : " (upper bound on the infimum)")
           << "\n";
        os << "prefall " << bexpr.to_string() << " = " << bexpr.evaluate(prec).to_string(15)
           << "\n";
    } else if (op == "relbocrit") {
        long d = job.get_long("d", 1);
        Rat rho = parse_rat(job.require("rho"));
        std::vector<SubextDatum> data;
        for (const auto& part : split_commas(job.require("data"))) {
            auto colon = part.find(':');
            if (colon == std::string::npos) throw_parse(kModule, "data entries look like s:excess");
            SubextDatum datum;
            datum.s = std::stol(part.substr(0, colon));
            datum.excess = PowProduct::of(parse_int(part.substr(colon + 1)), Rat(1));
            data.push_back(std::move(datum));
        }
        RelboResult res = relbocrit_bound(d, rho, data);
        os << "criterion " << (res.pass ? "pass" : "fail") << "\n";
        os << "bound " << res.bound.to_string() << " = " << res.bound.evaluate(prec).to_string(15)
           << "\n";
    } else if (op == "threshold") {
        ThresholdResult tr = corollary_v_threshold(static_cast<int>(job.get_long("d", 1)),
                                                   std::stod(job.get("halpha", "0")),
                                                   parse_rat(job.require("rho")));
        os << "threshold c=" << tr.c.get_str() << " certified=" << (tr.certified ? "true" : "false")
           << " scanned_to=" << tr.scanned_to.get_str() << "\n";
    } else if (op == "theta") {
        ThetaSplit split = optimize_theta(job.get_long("ell", 5));
        os << "theta " << split.theta.get_str() << "\n";
        os << "epsilon " << split.combined.to_string() << " = "
           << split.combined.evaluate(prec).to_string(15) << "\n";
    } else if (op == "tower42") {
        BoundExpr bexpr = tower_bound_42(parse_int(job.require("p")));
        os << "bound " << bexpr.to_string() << " = " << bexpr.evaluate(prec).to_string(15) << "\n";
    } else {
        throw_parse(kModule, "unknown bounds op '" + op + "'");
    }
}

} // namespace

std::string JobSpec::get(const std::string& key, const std::string& fallback) const {
    auto it = options.find(key);
    return it == options.end() ? fallback : it->second;
}

std::string JobSpec::require(const std::string& key) const {
    auto it = options.find(key);
    if (it == options.end()) throw_parse(kModule, "missing required option '" + key + "'");
    return it->second;
}

long JobSpec::get_long(const std::string& key, long fallback) const {
    auto it = options.find(key);
    if (it == options.end()) return fallback;
    try {
        return std::stol(it->second);
    } catch (...) {
        throw_parse(kModule, "option '" + key + "' is not an integer");
    }
}

JobSpec JobSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_io(kModule, "cannot read job file '" + path + "'");
    JobSpec job;
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        size_t sep = line.find_first_of(" \t", start);
        std::string key = line.substr(start, sep - start);
        std::string value;
        if (sep != std::string::npos) {
            size_t vstart = line.find_first_not_of(" \t", sep);
            if (vstart != std::string::npos) {
                size_t vend = line.find_last_not_of(" \t\r");
                value = line.substr(vstart, vend - vstart + 1);
            }
        }
        if (key == "command")
            job.command = value;
        else
            job.options[key] = value;
    }
    if (job.command.empty()) throw_parse(kModule, "job file has no 'command' line");
    return job;
}

JobResult run(const JobSpec& job) {
    JobResult result;
    std::ostringstream os;
    try {
        if (job.command == "height") cmd_height(job, os);
        else if (job.command == "split") cmd_split(job, os);
        else if (job.command == "kummer") cmd_kummer(job, os);
        else if (job.command == "certify") cmd_certify(job, os);
        else if (job.command == "verify") cmd_verify(job, os, result.exit_code);
        else if (job.command == "construct") cmd_construct(job, os);
        else if (job.command == "witnesses") cmd_witnesses(job, os);
        else if (job.command == "tower") cmd_tower(job, os);
        else if (job.command == "bounds") cmd_bounds(job, os);
        else throw_parse(kModule, "unknown command '" + job.command + "'");
        result.output = os.str();

        if (job.has("out")) {
            std::ofstream out(job.get("out"));
            if (!out) throw_io(kModule, "cannot write '" + job.get("out") + "'");
            out << result.output;
            result.output = "wrote " + job.get("out") + "\n";
        }
    } catch (const Error& e) {
        result.exit_code = exit_code_for(e.category());
        result.error = std::string("error category=") + category_name(e.category()) +
                       " module=" + e.module() + ": " + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = 5;
        result.error = std::string("error category=internal module=cli: ") + e.what() + "\n";
    }
    return result;
}

} // namespace bogocert
