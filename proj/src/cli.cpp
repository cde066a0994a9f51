#include "gfharm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gfharm/fixtures.hpp"
#include "gfharm/verify.hpp"

namespace gfharm {

namespace {

struct Options {
    std::optional<int> p;
    int ell = 1;
    std::string modulus;
    std::string backend = "exact";
    double tolerance = kOperatorTolerance;
    std::string json_path;
    unsigned max_order = 343;
    int half_phase_offset = 0;

    std::string kind;
    std::string suite = "all";
    std::string alpha = "0";
    std::string beta = "0";
    std::string r, s, t, u;
    std::optional<int> d;
    int k = 1;
    bool with_float = false;
    bool exhaustive = false;
    std::string theta;
    std::uint64_t seed = SuiteConfig{}.seed;
    int samples = SuiteConfig{}.samples;
};

void add_field_options(CLI::App* app, Options& o, bool p_required) {
    auto* p = app->add_option("--p", o.p, "Characteristic (prime)");
    if (p_required) p->required();
    app->add_option("--ell", o.ell, "Extension degree")->check(CLI::PositiveNumber);
    app->add_option("--modulus", o.modulus, "Modulus coefficients c0,c1,...[,1]");
    app->add_option("--backend", o.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    app->add_option("--tolerance", o.tolerance, "Float-backend operator tolerance");
    app->add_option("--json", o.json_path, "Write the JSON result to this path instead of stdout");
    app->add_option("--max-order", o.max_order, "Largest accepted p^ell");
    app->add_option("--half-phase-offset", o.half_phase_offset, "Added to 2^{-1} in displacement phases");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            raise(ErrorKind::Parse, "bad integer \"" + item + "\" in \"" + text + "\"");
        }
    }
    if (out.empty()) raise(ErrorKind::Parse, "empty coefficient list");
    return out;
}

FieldPtr build_field(int p, int ell, const std::string& modulus, unsigned max_order) {
    if (p < 2 || !is_prime(p)) raise(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    unsigned long long order = 1;
    for (int i = 0; i < ell; ++i) {
        order *= static_cast<unsigned long long>(p);
        if (order > max_order) {
            raise(ErrorKind::TooLarge, std::to_string(p) + "^" + std::to_string(ell) + " exceeds --max-order " + std::to_string(max_order));
        }
    }
    std::optional<std::vector<int>> m;
    if (!modulus.empty()) m = parse_int_list(modulus);
    return make_field(p, ell, m);
}

FieldPtr field_from(const Options& o) { return build_field(*o.p, o.ell, o.modulus, o.max_order); }

Backend backend_from(const Options& o) { return o.backend == "float" ? Backend::Float : Backend::Exact; }

void emit(const Options& o, const Json& j, std::ostream& out) {
    if (o.json_path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream file(o.json_path);
    if (!file) raise(ErrorKind::Parse, "cannot write " + o.json_path);
    file << j.dump(2) << "\n";
}

Json matrix_json(const Options& o, const OperatorMatrix& m) {
    const OperatorMatrix shown = backend_from(o) == Backend::Float ? m.to_float() : m;
    return to_json(shown, o.with_float);
}

int cmd_field(const Options& o, std::ostream& out) {
    emit(o, field_report(*field_from(o)), out);
    return kExitPass;
}

int cmd_op(const Options& o, std::ostream& out) {
    const FieldPtr fp = field_from(o);
    const GaloisField& f = *fp;
    Json extra = Json::object();
    OperatorMatrix m;
    if (o.kind == "fourier") {
        m = o.d ? subfield_fourier(f, *o.d) : fourier_matrix(f);
    } else if (o.kind == "frobenius") {
        m = frobenius_permutation(f).pow(o.k).dense();
        extra["power"] = o.k;
    } else if (o.kind == "zpow") {
        m = z_power(f, f.parse(o.alpha)).dense();
        extra["alpha"] = f.format(f.parse(o.alpha));
    } else if (o.kind == "xpow") {
        m = x_power(f, f.parse(o.beta)).dense();
        extra["beta"] = f.format(f.parse(o.beta));
    } else if (o.kind == "displace") {
        const DisplacementSystem ds(fp, o.half_phase_offset);
        m = ds.displacement(f.parse(o.alpha), f.parse(o.beta)).dense();
        extra["alpha"] = f.format(f.parse(o.alpha));
        extra["beta"] = f.format(f.parse(o.beta));
    } else if (o.kind == "symplectic") {
        if (o.r.empty() || o.s.empty() || o.t.empty()) raise(ErrorKind::Parse, "op symplectic needs --r, --s and --t");
        const DisplacementSystem ds(fp, o.half_phase_offset);
        const SymplecticSystem sy(ds);
        const SymplecticParams sp = o.u.empty() ? sy.params(f.parse(o.r), f.parse(o.s), f.parse(o.t))
                                                : sy.params(f.parse(o.r), f.parse(o.s), f.parse(o.t), f.parse(o.u));
        m = sy.synthesize(sp);
        Json params;
        params["r"] = f.format(sp.r);
        params["s"] = f.format(sp.s);
        params["t"] = f.format(sp.t);
        params["u"] = f.format(sp.u);
        params["matrix"] = Json::array({Json::array({f.format(sp.u), f.format(sp.s)}), Json::array({f.format(sp.t), f.format(sp.r)})});
        params["generic_chart"] = sy.is_generic(sp);
        extra["params"] = std::move(params);
    } else if (o.kind == "projector") {
        if (o.d) {
            m = subspace_projector(f, *o.d);
            extra["d"] = *o.d;
        } else {
            m = point_projector(f, f.parse(o.alpha));
            extra["alpha"] = f.format(f.parse(o.alpha));
        }
    } else {
        raise(ErrorKind::Parse, "unknown operator kind \"" + o.kind + "\"");
    }
    Json j = matrix_json(o, m);
    j["operator"] = o.kind;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    emit(o, j, out);
    return kExitPass;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
    const FieldPtr fp = field_from(o);
    Json j;
    j["operator"] = o.kind;
    Json projectors = Json::array();
    if (o.kind == "fourier") {
        const FourierSpectrum spec = fourier_spectrum(*fp);
        j["eigenvalues"] = Json::array({"1", "i", "-1", "-i"});
        j["ranks"] = spec.ranks;
        for (const auto& m : spec.projectors) projectors.push_back(matrix_json(o, m));
    } else {
        const FrobeniusSpectrum spec = frobenius_spectrum(*fp);
        Json eig = Json::array();
        for (int lam = 0; lam < fp->degree(); ++lam) {
            eig.push_back("exp(2 pi i " + std::to_string(lam) + "/" + std::to_string(fp->degree()) + ")");
        }
        j["eigenvalues"] = std::move(eig);
        j["ranks"] = spec.ranks;
        for (const auto& m : spec.projectors) projectors.push_back(matrix_json(o, m));
    }
    j["projectors"] = std::move(projectors);
    emit(o, j, out);
    return kExitPass;
}

int cmd_weyl(const Options& o, std::ostream& out) {
    const FieldPtr fp = field_from(o);
    const GaloisField& f = *fp;
    const DisplacementSystem ds(fp, o.half_phase_offset);
    std::ifstream in(o.theta);
    if (!in) raise(ErrorKind::Parse, "cannot read " + o.theta);
    Json input;
    try {
        input = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::Parse, std::string("theta is not JSON: ") + e.what());
    }
    OperatorMatrix theta = matrix_from_json(input, ds.ring());
    if (backend_from(o) == Backend::Float) theta = theta.to_float();
    const WeylTable table = ds.weyl_expand(theta);

    Json entries = Json::array();
    std::size_t k = 0;
    for (auto a : f.elements()) {
        for (auto b : f.elements()) {
            Json e;
            e["alpha"] = f.format(a);
            e["beta"] = f.format(b);
            if (table.backend == Backend::Exact) {
                if (!table.exact[k].is_zero()) {
                    e["value"] = to_json(table.exact[k]);
                    entries.push_back(std::move(e));
                }
            } else if (std::abs(table.approx[k]) > o.tolerance) {
                e["value"] = Json::array({table.approx[k].real(), table.approx[k].imag()});
                entries.push_back(std::move(e));
            }
            ++k;
        }
    }
    Json j;
    j["dim"] = table.dim;
    j["backend"] = to_string(table.backend);
    j["nonzero"] = std::move(entries);
    j["round_trip"] = ds.weyl_reconstruct(table).equals(theta, o.tolerance);
    emit(o, j, out);
    return kExitPass;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<FieldPtr> fields;
    if (o.p) {
        fields.push_back(field_from(o));
    } else {
        for (auto [p, l] : default_grid()) fields.push_back(build_field(p, l, "", o.max_order));
    }
    Json reports = Json::array();
    bool ok = true;
    for (const auto& fp : fields) {
        SuiteConfig cfg;
        cfg.field = fp;
        cfg.backend = backend_from(o);
        cfg.tolerance = o.tolerance;
        cfg.exhaustive = o.exhaustive;
        cfg.half_phase_offset = o.half_phase_offset;
        cfg.seed = o.seed;
        cfg.samples = o.samples;
        const VerifyReport rep = run_suite(o.suite, cfg);
        ok = ok && rep.ok();
        for (const auto& c : rep.checks) {
            if (!c.skipped && !c.passed) err << "FAIL GF(" << rep.p << "^" << rep.ell << ") " << c.identity << ": " << c.detail << "\n";
        }
        err << "GF(" << rep.p << "^" << rep.ell << ") " << o.suite << ": " << rep.count_passed() << " passed, "
            << rep.count_failed() << " failed, " << rep.count_skipped() << " skipped\n";
        reports.push_back(to_json(rep));
    }
    Json j;
    j["suite"] = o.suite;
    j["ok"] = ok;
    j["fields"] = std::move(reports);
    emit(o, j, out);
    return ok ? kExitPass : kExitVerificationFailure;
}

int cmd_fixtures(const Options& o, std::ostream& out, std::ostream& err) {
    const FixtureReport rep = run_fixtures();
    Json items = Json::array();
    Json diff = Json::array();
    for (const auto& item : rep.items) {
        Json e;
        e["name"] = item.name;
        e["status"] = item.passed ? "pass" : "fail";
        e["expected"] = item.expected;
        e["actual"] = item.actual;
        if (!item.note.empty()) e["note"] = item.note;
        if (!item.passed) {
            diff.push_back(e);
            err << "FIXTURE MISMATCH " << item.name << ": expected " << item.expected << ", got " << item.actual << "\n";
        }
        items.push_back(std::move(e));
    }
    Json j;
    j["field"] = "GF(9), eps^2 + eps + 2";
    j["ok"] = rep.ok();
    j["items"] = std::move(items);
    j["diff"] = std::move(diff);
    emit(o, j, out);
    return rep.ok() ? kExitPass : kExitVerificationFailure;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime:
        case ErrorKind::ReducibleModulus:
        case ErrorKind::DegreeMismatch:
        case ErrorKind::NotADivisor:
        case ErrorKind::Parse:
        case ErrorKind::TooLarge:
            return kExitUsage;
        case ErrorKind::Overflow:
            return kExitInternal;
        default:
            return kExitDomain;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Harmonic analysis on Galois fields GF(p^l)", "gfharm"};
    app.require_subcommand(1);

    auto* field = app.add_subcommand("field", "Field report: elements, traces, dual basis, subfields");
    add_field_options(field, o, true);

    auto* op = app.add_subcommand("op", "Emit an operator as JSON");
    add_field_options(op, o, true);
    op->add_option("kind", o.kind, "fourier|frobenius|zpow|xpow|displace|symplectic|projector")
        ->required()
        ->check(CLI::IsMember({"fourier", "frobenius", "zpow", "xpow", "displace", "symplectic", "projector"}));
    op->add_option("--alpha", o.alpha, "Element text m0,m1,... or index");
    op->add_option("--beta", o.beta, "Element text m0,m1,... or index");
    op->add_option("--r", o.r);
    op->add_option("--s", o.s);
    op->add_option("--t", o.t);
    op->add_option("--u", o.u);
    op->add_option("--d", o.d, "Subfield degree");
    op->add_option("--k", o.k, "Frobenius power");
    op->add_flag("--float", o.with_float, "Include a float rendering of exact entries");

    auto* spectrum = app.add_subcommand("spectrum", "Spectral projectors of F or G");
    add_field_options(spectrum, o, true);
    spectrum->add_option("kind", o.kind)->required()->check(CLI::IsMember({"fourier", "frobenius"}));
    spectrum->add_flag("--float", o.with_float, "Include a float rendering of exact entries");

    auto* weyl = app.add_subcommand("weyl", "Weyl function tr[Theta D(alpha, beta)] of a JSON operator");
    add_field_options(weyl, o, true);
    weyl->add_option("--theta", o.theta, "Matrix JSON file")->required();

    auto* verify = app.add_subcommand("verify", "Run identity suites; without --p, over the default grid");
    add_field_options(verify, o, false);
    verify->add_option("suite", o.suite, "all|gf|fourier|frobenius|heisenberg|symplectic")
        ->check(CLI::IsMember(suite_names()));
    verify->add_flag("--exhaustive", o.exhaustive, "Sweep all of Sp(2, GF(q)) for q <= 9");
    verify->add_option("--seed", o.seed, "Sampling seed");
    verify->add_option("--samples", o.samples, "Group elements sampled per symplectic check");

    auto* fixtures = app.add_subcommand("fixtures", "Reproduce the GF(9) worked examples and diff them");
    fixtures->add_option("--json", o.json_path, "Write the JSON result to this path instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*field) return cmd_field(o, out);
        if (*op) return cmd_op(o, out);
        if (*spectrum) return cmd_spectrum(o, out);
        if (*weyl) return cmd_weyl(o, out);
        if (*verify) return cmd_verify(o, out, err);
        if (*fixtures) return cmd_fixtures(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace gfharm
