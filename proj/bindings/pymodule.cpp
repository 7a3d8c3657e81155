#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bogocert/bounds.hpp"
#include "bogocert/constructor.hpp"
#include "bogocert/errors.hpp"
#include "bogocert/hensel.hpp"
#include "bogocert/modpoly.hpp"

namespace py = pybind11;
using namespace bogocert;

namespace {

struct PyField {
    FieldPtr ptr;
};

IntPoly poly_from_object(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return IntPoly::parse(obj.cast<std::string>());
    std::vector<std::string> coeffs;
    for (const auto& item : obj.cast<py::iterable>()) coeffs.push_back(py::str(item));
    return IntPoly::deserialize(coeffs);
}

FieldElement element_from_object(const FieldPtr& F, const py::object& obj) {
    std::vector<std::string> coords;
    if (py::isinstance<py::str>(obj)) {
        coords.push_back(obj.cast<std::string>());
    } else if (py::isinstance<py::int_>(obj)) {
        coords.push_back(py::str(obj));
    } else {
        for (const auto& item : obj.cast<py::iterable>()) coords.push_back(py::str(item));
    }
    return FieldElement::deserialize(F, coords);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact heights, Kummer ramification analysis and height-gap certificates";

    py::register_exception<Error>(m, "KernelError");

    m.def("resultant",
          [](const py::object& a, const py::object& b) {
              return resultant(poly_from_object(a), poly_from_object(b)).get_str();
          },
          py::arg("a"), py::arg("b"));
    m.def("discriminant",
          [](const py::object& f) { return poly_discriminant(poly_from_object(f)).get_str(); },
          py::arg("f"));
    m.def("squarefree_part",
          [](const py::object& f) { return squarefree_part(poly_from_object(f)).serialize(); },
          py::arg("f"));
    m.def("factor_mod_p",
          [](const py::object& f, const std::string& p) {
              auto fac = factor_mod_p(poly_from_object(f), Int(p));
              py::list out;
              for (const auto& part : fac.factors)
                  out.append(py::make_tuple(part.factor.lift().serialize(), part.multiplicity));
              return out;
          },
          py::arg("f"), py::arg("p"));
    m.def("hensel_lift_blocks",
          [](const py::object& f, const py::list& blocks, const std::string& ell, unsigned k) {
              std::vector<IntPoly> bs;
              for (const auto& b : blocks) bs.push_back(poly_from_object(py::reinterpret_borrow<py::object>(b)));
              auto lifted = hensel_lift_blocks(poly_from_object(f), bs, Int(ell), k);
              py::list out;
              for (const auto& g : lifted) out.append(g.serialize());
              return out;
          },
          py::arg("f"), py::arg("blocks"), py::arg("ell"), py::arg("k"));

    py::class_<PyField>(m, "NumberField")
        .def_static("create",
                    [](const py::object& f) { return PyField{NumberField::create(poly_from_object(f))}; })
        .def_property_readonly("degree", [](const PyField& f) { return f.ptr->degree(); })
        .def_property_readonly("signature",
                               [](const PyField& f) {
                                   return py::make_tuple(f.ptr->real_places(), f.ptr->complex_pairs());
                               })
        .def_property_readonly("delta", [](const PyField& f) { return f.ptr->delta(); })
        .def_property_readonly("minpoly", [](const PyField& f) { return f.ptr->serialize(); });

    m.def("height",
          [](const PyField& F, const py::object& coords, long digits) {
              HeightEstimate h = height(element_from_object(F.ptr, coords), digits);
              py::dict out;
              out["exact_zero"] = h.is_zero;
              out["value"] = h.is_zero ? 0.0 : h.value.to_double();
              out["error_bound"] = h.is_zero ? 0.0 : h.error_bound.to_double();
              return out;
          },
          py::arg("field"), py::arg("coords"), py::arg("digits") = 30);
    m.def("min_poly",
          [](const PyField& F, const py::object& coords) {
              return min_poly_over_Q(element_from_object(F.ptr, coords)).serialize();
          },
          py::arg("field"), py::arg("coords"));
    m.def("norm",
          [](const PyField& F, const py::object& coords) {
              return element_from_object(F.ptr, coords).norm().get_str();
          },
          py::arg("field"), py::arg("coords"));
    m.def("is_lth_power",
          [](const PyField& F, const py::object& coords, unsigned ell) {
              PowerCheck pc = is_lth_power(element_from_object(F.ptr, coords), ell);
              py::dict out;
              out["status"] = pc.kind == PowerCheck::Kind::yes
                                  ? "yes"
                                  : (pc.kind == PowerCheck::Kind::no ? "no" : "unknown");
              out["note"] = pc.note;
              if (pc.witness) out["witness"] = pc.witness->serialize();
              return out;
          },
          py::arg("field"), py::arg("coords"), py::arg("ell"));

    m.def("split_prime",
          [](const PyField& F, const std::string& ell) {
              SplittingReport rep = split_prime(F.ptr, Int(ell));
              py::list factors;
              for (const auto& P : rep.factors) {
                  py::dict d;
                  d["g"] = P.residue_factor.serialize();
                  d["e"] = P.e;
                  d["f"] = P.f;
                  factors.append(d);
              }
              py::dict out;
              out["ell"] = ell;
              out["dedekind_ok"] = rep.dedekind_ok;
              out["factors"] = factors;
              return out;
          },
          py::arg("field"), py::arg("ell"));
    m.def("dedekind_check",
          [](const PyField& F, const std::string& ell) { return dedekind_check(F.ptr, Int(ell)); },
          py::arg("field"), py::arg("ell"));

    m.def("check_a1",
          [](const PyField& F, const py::object& alpha, const std::string& ell) {
              KummerAnalysis an = check_a1(F.ptr, element_from_object(F.ptr, alpha), Int(ell));
              py::dict out;
              out["conclusion"] = an.conclusion == KummerConclusion::totally_ramified_all
                                      ? "totally_ramified_all"
                                      : "inconclusive";
              out["irreducible_certified"] = an.irreducible_certified;
              py::list primes;
              for (const auto& rec : an.primes) {
                  py::dict p;
                  p["e"] = rec.P.e;
                  p["f"] = rec.P.f;
                  p["a"] = rec.a;
                  p["w"] = rec.w;
                  primes.append(p);
              }
              out["primes"] = primes;
              return out;
          },
          py::arg("field"), py::arg("alpha"), py::arg("ell"));

    m.def("construct_alpha",
          [](const PyField& F, const std::string& ell) {
              AlphaConstruction c = construct_alpha(F.ptr, Int(ell));
              py::dict out;
              out["alpha"] = c.alpha.serialize();
              py::list ver;
              for (const auto& [P, w] : c.verification) {
                  py::dict p;
                  p["f"] = P.f;
                  p["w"] = w;
                  ver.append(p);
              }
              out["verification"] = ver;
              return out;
          },
          py::arg("field"), py::arg("ell"));

    m.def("certify",
          [](const PyField& F, const py::object& alpha, const std::string& ell,
             const std::string& rho, const std::string& attest) {
              Rat r;
              r.set_str(rho, 10);
              r.canonicalize();
              Certificate cert = finram_certificate(F.ptr, element_from_object(F.ptr, alpha), Int(ell), r,
                                                    "declared", {attest});
              return certificate_to_json(cert);
          },
          py::arg("field"), py::arg("alpha"), py::arg("ell"), py::arg("rho"), py::arg("attest"));
    m.def("verify_certificate", [](const std::string& text) {
        VerifyResult vr = verify_certificate(text);
        return py::make_tuple(vr.ok, vr.detail);
    });

    m.def("tower_bound_42", [](const std::string& p) {
        BoundExpr bexpr = tower_bound_42(Int(p));
        return py::make_tuple(bexpr.to_string(), bexpr.evaluate(192).to_double());
    });
    m.def("silverman_bound", [](long s, long d_abs, long delta, const std::string& norm) {
        BoundExpr bexpr = silverman_bound(s, d_abs, delta, Int(norm));
        return py::make_tuple(bexpr.to_string(), bexpr.evaluate(192).to_double());
    });
    m.def("garza_bound", [](long d, long r) {
        BoundExpr bexpr = garza_bound(d, r);
        return py::make_tuple(bexpr.to_string(), bexpr.evaluate(192).to_double());
    });
}
