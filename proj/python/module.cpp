#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "berk/errors.hpp"
#include "berk/parse.hpp"
#include "berk/report.hpp"

namespace py = pybind11;
using namespace berk;

namespace {

InstanceFile instance_from_str(const std::string& text) {
    return load_instance(json::parse(text));
}

std::string py_parse_series(const std::string& text) { return parse_series(text).str(); }

std::string py_validate(const std::string& instance) {
    InstanceFile inst = instance_from_str(instance);
    ValidationReport rep = validate(inst.coeffs);
    json j;
    j["valid"] = rep.valid();
    json v = json::array();
    for (const auto& x : rep.violations) v.push_back(x.check + ": " + x.detail);
    j["violations"] = std::move(v);
    j["notes"] = rep.notes;
    return j.dump();
}

std::string py_classify(const std::string& instance) {
    InstanceFile inst = instance_from_str(instance);
    return label_to_json(classify_case(inst.coeffs, inst.working_span)).dump();
}

std::string py_locus(const std::string& instance, const std::string& mode) {
    InstanceFile inst = instance_from_str(instance);
    const CubicCoefficients& c = inst.coeffs;
    LocusReport rep;
    rep.label = classify_case(c, inst.working_span);
    rep.mode = mode;
    rep.roots = solve_psi(c, inst.working_span);
    HullTree hull = critical_hull(rep.roots);
    if (mode == "symbolic")
        rep.locus = decide_locus_symbolic(c, rep.label, rep.roots);
    else if (mode == "oracle")
        rep.locus = decide_locus_oracle(c, hull, rep.label);
    else {
        CrossReport cr = cross_check(c, inst.working_span);
        rep.locus = cr.oracle;
        rep.cross = std::move(cr);
    }
    return locus_report_to_json(rep).dump();
}

int py_multiplicity(const std::string& instance, const std::string& center,
                    const std::string& radius_exp) {
    InstanceFile inst = instance_from_str(instance);
    auto r = rat_parse(radius_exp);
    if (!r) throw Error("bad radius exponent " + radius_exp);
    return multiplicity_at(inst.coeffs.numerator(), inst.coeffs.denominator(),
                           BerkPoint::disk(parse_series(center), *r));
}

std::string py_trace(const std::string& instance, int grid) {
    InstanceFile inst = instance_from_str(instance);
    const CubicCoefficients& c = inst.coeffs;
    CriticalPair roots = solve_psi(c, inst.working_span);
    HullTree hull = critical_hull(roots);
    auto samples = trace_locus(c.numerator(), c.denominator(), hull, grid);
    json arr = json::array();
    for (const auto& s : samples) arr.push_back(sample_to_json(s));
    return arr.dump();
}

std::string py_cross_check(const std::string& instance) {
    InstanceFile inst = instance_from_str(instance);
    return cross_to_json(cross_check(inst.coeffs, inst.working_span)).dump();
}

}  // namespace

PYBIND11_MODULE(_berkcubic, m) {
    m.doc() = "cubic rational maps over Puiseux series: Berkovich ramification loci";
    m.def("parse_series", &py_parse_series, py::arg("text"),
          "normalize a series literal");
    m.def("validate", &py_validate, py::arg("instance_json"));
    m.def("classify", &py_classify, py::arg("instance_json"));
    m.def("locus", &py_locus, py::arg("instance_json"), py::arg("mode") = "oracle");
    m.def("multiplicity", &py_multiplicity, py::arg("instance_json"), py::arg("center"),
          py::arg("radius_exp"));
    m.def("trace", &py_trace, py::arg("instance_json"), py::arg("grid") = 3);
    m.def("cross_check", &py_cross_check, py::arg("instance_json"));

    py::register_exception<berk::Error>(m, "BerkError");
}
