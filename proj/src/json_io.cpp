#include "gfharm/json_io.hpp"

#include <cmath>

namespace gfharm {

namespace {

Json complex_pair(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

RingPtr resolve_ring(const Json& j, RingPtr ring) {
    if (j.contains("N") && j.contains("p")) {
        const int n = j.at("N").get<int>();
        const int p = j.at("p").get<int>();
        if (ring && (ring->order() != n || ring->prime() != p)) {
            raise(ErrorKind::Parse, "JSON ring Q(zeta_" + std::to_string(n) + ") does not match the field's ring");
        }
        return ring ? ring : CycloRing::get(n, p);
    }
    if (!ring) raise(ErrorKind::Parse, "JSON lacks \"N\" and \"p\" and no ring was supplied");
    return ring;
}

bool is_float_entry(const Json& e) { return e.is_number() || e.is_array(); }

std::complex<double> float_entry(const Json& e) {
    if (e.is_number()) return {e.get<double>(), 0.0};
    if (e.is_array() && e.size() == 2) return {e[0].get<double>(), e[1].get<double>()};
    raise(ErrorKind::Parse, "float entry must be a number or [re, im]");
}

Json prime_matrix_json(const PrimeMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.size; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.size; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

Json to_json(const CycloScalar& x) {
    Json j;
    j["coeffs"] = x.coeffs();
    j["scale_exp"] = x.scale_exp();
    j["denom"] = x.denom();
    j["N"] = x.ring()->order();
    j["p"] = x.ring()->prime();
    return j;
}

CycloScalar scalar_from_json(const RingPtr& ring, const Json& j) {
    try {
        auto coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
        const std::int64_t denom = j.value("denom", std::int64_t{1});
        const int scale = j.value("scale_exp", 0);
        if (j.contains("N") && j.at("N").get<int>() != ring->order()) {
            raise(ErrorKind::Parse, "scalar N does not match the ring");
        }
        if (coeffs.size() != static_cast<std::size_t>(ring->degree())) {
            raise(ErrorKind::Parse, "scalar needs " + std::to_string(ring->degree()) + " coefficients");
        }
        if (denom <= 0) raise(ErrorKind::Parse, "scalar denominator must be positive");
        return CycloScalar::scaled(ring, std::move(coeffs), scale, denom);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::Parse, std::string("bad scalar JSON: ") + e.what());
    }
}

Json to_json(const OperatorMatrix& m, bool with_float) {
    Json j;
    j["dim"] = m.dim();
    j["backend"] = to_string(m.backend());
    j["N"] = m.ring()->order();
    j["p"] = m.ring()->prime();
    Json entries = Json::array();
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            entries.push_back(m.exact() ? to_json(m.entry(r, c)) : complex_pair(m.value(r, c)));
        }
    }
    j["entries"] = std::move(entries);
    if (with_float && m.exact()) {
        Json approx = Json::array();
        for (int r = 0; r < m.dim(); ++r) {
            for (int c = 0; c < m.dim(); ++c) approx.push_back(complex_pair(m.value(r, c)));
        }
        j["float"] = std::move(approx);
    }
    return j;
}

OperatorMatrix matrix_from_json(const Json& j, RingPtr ring) {
    try {
        ring = resolve_ring(j, std::move(ring));
        const int dim = j.at("dim").get<int>();
        const Json& entries = j.at("entries");
        if (dim <= 0 || entries.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
            raise(ErrorKind::Parse, "\"entries\" must hold dim^2 values");
        }
        Backend backend = Backend::Exact;
        if (j.contains("backend")) {
            const auto b = j.at("backend").get<std::string>();
            if (b == "float") backend = Backend::Float;
            else if (b != "exact") raise(ErrorKind::Parse, "unknown backend \"" + b + "\"");
        } else if (is_float_entry(entries.at(0))) {
            backend = Backend::Float;
        }
        OperatorMatrix m = OperatorMatrix::zero(ring, dim, backend);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                const Json& e = entries.at(static_cast<std::size_t>(r * dim + c));
                if (backend == Backend::Float) {
                    m.set(r, c, float_entry(e));
                } else if (e.is_object()) {
                    m.set(r, c, scalar_from_json(ring, e));
                } else if (e.is_number_integer()) {
                    m.set(r, c, CycloScalar::integer(ring, e.get<std::int64_t>()));
                } else {
                    raise(ErrorKind::Parse, "exact entry must be a scalar object or an integer");
                }
            }
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::Parse, std::string("bad matrix JSON: ") + e.what());
    }
}

Json to_json(const StateVector& v) {
    Json j;
    j["dim"] = v.dim();
    j["N"] = v.ring()->order();
    j["p"] = v.ring()->prime();
    Json values = Json::array();
    for (const auto& x : v.values()) values.push_back(to_json(x));
    j["values"] = std::move(values);
    return j;
}

StateVector state_from_json(const Json& j, RingPtr ring) {
    try {
        ring = resolve_ring(j, std::move(ring));
        const int dim = j.at("dim").get<int>();
        const Json& values = j.at("values");
        if (values.size() != static_cast<std::size_t>(dim)) raise(ErrorKind::Parse, "\"values\" must hold dim values");
        std::vector<CycloScalar> out;
        out.reserve(values.size());
        for (const auto& v : values) {
            out.push_back(v.is_object() ? scalar_from_json(ring, v) : CycloScalar::integer(ring, v.get<std::int64_t>()));
        }
        return StateVector(std::move(out));
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::Parse, std::string("bad state JSON: ") + e.what());
    }
}

Json field_report(const GaloisField& field) {
    Json j;
    j["p"] = field.characteristic();
    j["ell"] = field.degree();
    j["order"] = field.order();
    j["modulus"] = field.modulus();
    j["generator"] = field.format(field.generator());

    Json elements = Json::array();
    for (auto a : field.elements()) {
        const Components c = field.components(a);
        Json e;
        e["index"] = a.index;
        e["text"] = field.format(a);
        e["trace"] = field.trace(a);
        e["standard_components"] = c.standard;
        e["dual_components"] = c.dual;
        elements.push_back(std::move(e));
    }
    j["elements"] = std::move(elements);

    const DualBasis& dual = field.dual_basis();
    j["gram"] = prime_matrix_json(dual.gram);
    j["inverse_gram"] = prime_matrix_json(dual.inverse_gram);
    Json basis = Json::array();
    for (auto e : dual.elements) basis.push_back(field.format(e));
    j["dual_basis"] = std::move(basis);

    Json subfields = Json::array();
    for (int d : field.divisors()) {
        Json s;
        s["d"] = d;
        s["order"] = static_cast<long long>(std::llround(std::pow(field.characteristic(), d)));
        Json members = Json::array();
        Json traces = Json::object();
        for (auto a : field.subfield_elements(d)) {
            members.push_back(field.format(a));
            traces[field.format(a)] = field.subfield_trace(a, d);
        }
        s["elements"] = std::move(members);
        s["subfield_traces"] = std::move(traces);
        s["galois_group"] = field.galois_group(d);
        subfields.push_back(std::move(s));
    }
    j["subfields"] = std::move(subfields);
    return j;
}

}  // namespace gfharm
