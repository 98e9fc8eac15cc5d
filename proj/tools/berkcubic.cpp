#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "berk/errors.hpp"
#include "berk/parse.hpp"
#include "berk/report.hpp"

namespace {

using namespace berk;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitPrecision = 4;
constexpr int kExitTraceContradiction = 5;

InstanceFile load_or_exit(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(kExitIo);
    }
    json j;
    try {
        in >> j;
        return load_instance(j);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        std::exit(kExitIo);
    }
}

void validate_or_exit(const CubicCoefficients& c) {
    ValidationReport rep = validate(c);
    if (!rep.valid()) {
        for (const auto& v : rep.violations)
            std::cerr << "validation: " << v.check << ": " << v.detail << "\n";
        std::exit(kExitValidation);
    }
}

int run_classify(const std::string& path) {
    InstanceFile inst = load_or_exit(path);
    validate_or_exit(inst.coeffs);
    try {
        CaseLabel label = classify_case(inst.coeffs, inst.working_span);
        std::cout << label_to_json(label).dump() << "\n";
        return kExitOk;
    } catch (const UnclassifiableInput& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    }
}

int run_locus(const std::string& path, const std::string& format, const std::string& mode) {
    InstanceFile inst = load_or_exit(path);
    validate_or_exit(inst.coeffs);
    const CubicCoefficients& c = inst.coeffs;
    const Rat span = inst.working_span;

    LocusReport rep;
    rep.label = classify_case(c, span);
    rep.mode = mode;
    rep.roots = solve_psi(c, span);
    HullTree hull = critical_hull(rep.roots);
    int code = kExitOk;
    if (mode == "symbolic") {
        rep.locus = decide_locus_symbolic(c, rep.label, rep.roots);
    } else if (mode == "oracle") {
        rep.locus = decide_locus_oracle(c, hull, rep.label);
    } else {
        CrossReport cr = cross_check(c, span);
        rep.locus = cr.oracle;
        if (!cr.agreement) code = kExitDisagreement;
        rep.cross = std::move(cr);
    }
    if (format == "dot")
        std::cout << locus_to_dot(rep.locus);
    else
        std::cout << locus_report_to_json(rep).dump(2) << "\n";
    return code;
}

int run_mult(const std::string& path, const std::string& center, const std::string& radius) {
    InstanceFile inst = load_or_exit(path);
    validate_or_exit(inst.coeffs);
    auto r = rat_parse(radius);
    if (!r) {
        std::cerr << "bad radius exponent " << radius << "\n";
        return kExitIo;
    }
    SeriesPoly F = inst.coeffs.numerator();
    SeriesPoly G = inst.coeffs.denominator();
    BerkPoint x = BerkPoint::disk(Series::zero(), *r);
    if (center == "inf") {
        // flip to w = 1/z: the disk toward infinity becomes zeta_{0, r}
        SeriesPoly revF = F.reversed();
        SeriesPoly revG = G.reversed();
        SeriesPoly w(std::vector<Series>{Series::zero(), Series::from_rat(Rat(1))});
        F = w * revG;
        G = revF;
    } else {
        try {
            x = BerkPoint::disk(parse_series(center), *r);
        } catch (const SyntaxError& e) {
            std::cerr << "bad center: " << e.what() << "\n";
            return kExitIo;
        }
    }
    try {
        int m = multiplicity_at(F, G, x);
        json out;
        out["multiplicity"] = m;
        std::cout << out.dump() << "\n";
        return kExitOk;
    } catch (const PrecisionExhausted& e) {
        std::cerr << e.what() << "\n";
        return kExitPrecision;
    }
}

int run_trace(const std::string& path, int grid) {
    InstanceFile inst = load_or_exit(path);
    validate_or_exit(inst.coeffs);
    const CubicCoefficients& c = inst.coeffs;
    const Rat span = inst.working_span;
    CaseLabel label = classify_case(c, span);
    CriticalPair roots = solve_psi(c, span);
    HullTree hull = critical_hull(roots);
    LocusDescription verdict = decide_locus_oracle(c, hull, label);
    auto samples = trace_locus(c.numerator(), c.denominator(), hull, grid);

    const bool corrupt = std::getenv("BERKCUBIC_TRACE_CORRUPT") != nullptr;
    bool contradiction = false;
    json out = label_to_json(label);
    out["shape"] = verdict.connected ? "connected" : "two_components";
    json arr = json::array();
    for (const auto& s : samples) {
        json js = sample_to_json(s);
        bool predicted_in = verdict.connected || !s.interior_central;
        if (corrupt) predicted_in = !predicted_in;
        js["predicted_in_locus"] = predicted_in;
        if (s.multiplicity) {
            bool in = *s.multiplicity >= 2;
            if (in != predicted_in) {
                js["contradiction"] = true;
                contradiction = true;
            }
        }
        arr.push_back(std::move(js));
    }
    out["samples"] = std::move(arr);
    std::cout << out.dump(2) << "\n";
    return contradiction ? kExitTraceContradiction : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic rational maps over Puiseux series: classification and "
                 "Berkovich ramification loci"};
    app.require_subcommand(1);

    std::string path, format = "json", mode = "both", center = "0", radius = "0";
    int grid = 3;

    auto* cls = app.add_subcommand("classify", "case label of an instance file");
    cls->add_option("file", path)->required();

    auto* loc = app.add_subcommand("locus", "ramification locus report");
    loc->add_option("file", path)->required();
    loc->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    loc->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "oracle", "both"}));

    auto* mlt = app.add_subcommand("mult", "local degree at a disk point");
    mlt->add_option("file", path)->required();
    mlt->add_option("--center", center, "series literal or 'inf'");
    mlt->add_option("--radius-exp", radius, "rational radius exponent");

    auto* trc = app.add_subcommand("trace", "sample multiplicities over the hull");
    trc->add_option("file", path)->required();
    trc->add_option("--grid", grid)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitIo;
    }

    try {
        if (cls->parsed()) return run_classify(path);
        if (loc->parsed()) return run_locus(path, format, mode);
        if (mlt->parsed()) return run_mult(path, center, radius);
        if (trc->parsed()) return run_trace(path, grid);
    } catch (const PrecisionExhausted& e) {
        std::cerr << e.what() << "\n";
        return kExitPrecision;
    } catch (const berk::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    }
    return kExitIo;
}
