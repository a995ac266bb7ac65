#ifndef NILSTRAT_JSON_IO_HPP
#define NILSTRAT_JSON_IO_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "moduli.hpp"
#include "monodromy.hpp"
#include "partition.hpp"
#include "reduced.hpp"
#include "stratification.hpp"

namespace nilstrat::io {

/// Writers use insertion-ordered objects so field order is stable.
using Json = nlohmann::ordered_json;

inline Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::parse, e.what());
    }
}

/// Compact single-line rendering.
inline std::string dump(const Json& j) { return j.dump(); }

namespace detail {

[[noreturn]] inline void shape_error(const std::string& what) { fail(ErrorKind::parse, what); }

inline const Json& field(const Json& j, const char* key, const char* context) {
    if (!j.is_object()) shape_error(std::string(context) + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) shape_error(std::string(context) + " is missing \"" + key + "\"");
    return *it;
}

inline long long as_integer(const Json& j, const char* context) {
    if (!j.is_number_integer()) shape_error(std::string(context) + " must be an integer");
    return j.get<long long>();
}

}  // namespace detail

// --- partitions -----------------------------------------------------------

inline Json to_json(const Partition& p) {
    Json out = Json::array();
    for (int v : p.parts()) out.push_back(v);
    return out;
}

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) detail::shape_error("partition must be a JSON array of integers");
    std::vector<long long> values;
    for (const auto& v : j) values.push_back(detail::as_integer(v, "partition part"));
    return Partition(values);
}

// --- matrices --------------------------------------------------------------

using AnyMatrix = std::variant<RationalMatrix, PrimeMatrix>;

namespace detail {

inline Json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        return v.convert_to<long long>();
    }
    return v.str();
}

inline Json rational_to_json(const Rational& v) {
    const auto den = boost::multiprecision::denominator(v);
    if (den == 1) return big_to_json(boost::multiprecision::numerator(v));
    return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

inline BigInt parse_bigint(const std::string& s) {
    std::size_t i = (s.size() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) shape_error("malformed integer \"" + s + "\"");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') shape_error("malformed integer \"" + s + "\"");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) shape_error("matrix entry must be an integer or an \"a/b\" string");
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(s));
    const BigInt num = parse_bigint(s.substr(0, slash));
    const BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) shape_error("zero denominator in \"" + s + "\"");
    return Rational(num, den);
}

}  // namespace detail

template <typename Field>
Json to_json(const Matrix<Field>& m) {
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    if constexpr (Field::is_prime_field) out["modulus"] = m.field().modulus();
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (Field::is_prime_field) {
                row.push_back(m(i, j));
            } else {
                row.push_back(detail::rational_to_json(m(i, j)));
            }
        }
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

inline Json to_json(const AnyMatrix& m) {
    return std::visit([](const auto& v) { return to_json(v); }, m);
}

/// Reads the matrix format; a "modulus" key selects the prime field.
inline AnyMatrix matrix_from_json(const Json& j) {
    const auto rows = detail::as_integer(detail::field(j, "rows", "matrix"), "rows");
    const auto cols = detail::as_integer(detail::field(j, "cols", "matrix"), "cols");
    if (rows < 0 || cols < 0) detail::shape_error("matrix dimensions must be nonnegative");
    const auto& entries = detail::field(j, "entries", "matrix");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows)) {
        detail::shape_error("matrix \"entries\" must hold " + std::to_string(rows) + " rows");
    }
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
            detail::shape_error("every matrix row must hold " + std::to_string(cols) + " entries");
        }
    }
    auto fill = [&](auto field) {
        Matrix<decltype(field)> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), field);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t k = 0; k < m.cols(); ++k) {
                m.set(i, k, field.from_rational(detail::rational_from_json(entries[i][k])));
            }
        }
        return m;
    };
    if (j.contains("modulus")) {
        const auto p = detail::as_integer(j["modulus"], "modulus");
        if (p < 2) fail(ErrorKind::invalid_argument, "modulus must be a prime");
        return AnyMatrix(fill(PrimeField(static_cast<std::uint64_t>(p))));
    }
    return AnyMatrix(fill(RationalField{}));
}

// --- monodromy -------------------------------------------------------------

inline Json to_json(const TameBlockSpec& s) {
    Json out;
    out["label"] = s.label;
    out["tau_dim"] = s.tau_dim;
    out["tau_type"] = to_json(s.tau_type);
    out["mult"] = s.mult;
    return out;
}

inline TameBlockSpec spec_from_json(const Json& j) {
    TameBlockSpec s;
    const auto& label = detail::field(j, "label", "block spec");
    if (!label.is_string()) detail::shape_error("block spec \"label\" must be a string");
    s.label = label.get<std::string>();
    s.tau_dim = static_cast<int>(detail::as_integer(detail::field(j, "tau_dim", "block spec"), "tau_dim"));
    s.tau_type = partition_from_json(detail::field(j, "tau_type", "block spec"));
    s.mult = static_cast<int>(detail::as_integer(detail::field(j, "mult", "block spec"), "mult"));
    s.validate();
    return s;
}

inline std::vector<BlockInput> blocks_from_json(const Json& j) {
    if (!j.is_array()) detail::shape_error("block list must be a JSON array of {spec, alpha} objects");
    std::vector<BlockInput> out;
    for (const auto& item : j) {
        out.push_back({spec_from_json(detail::field(item, "spec", "block")),
                       partition_from_json(detail::field(item, "alpha", "block"))});
    }
    return out;
}

// --- stratification --------------------------------------------------------

inline Json to_json(const ComponentComplex& c) {
    Json out;
    out["n"] = c.n();
    Json components = Json::object();
    for (const auto& [id, label] : c.components()) components[id] = to_json(label);
    out["components"] = std::move(components);
    Json points = Json::object();
    for (const auto& [id, incidence] : c.points()) points[id] = incidence;
    out["points"] = std::move(points);
    return out;
}

inline ComponentComplex complex_from_json(const Json& j) {
    const auto n = detail::as_integer(detail::field(j, "n", "complex"), "n");
    const auto& comps = detail::field(j, "components", "complex");
    const auto& pts = detail::field(j, "points", "complex");
    if (!comps.is_object()) detail::shape_error("complex \"components\" must be an object");
    if (!pts.is_object()) detail::shape_error("complex \"points\" must be an object");
    std::map<ComponentComplex::Id, Partition> components;
    for (const auto& [id, label] : comps.items()) components.emplace(id, partition_from_json(label));
    std::map<ComponentComplex::Id, std::vector<ComponentComplex::Id>> points;
    for (const auto& [id, incidence] : pts.items()) {
        if (!incidence.is_array()) detail::shape_error("incidence of point " + id + " must be an array of ids");
        std::vector<ComponentComplex::Id> ids;
        for (const auto& c : incidence) {
            if (!c.is_string()) detail::shape_error("incidence of point " + id + " must hold string ids");
            ids.push_back(c.get<std::string>());
        }
        points.emplace(id, std::move(ids));
    }
    return ComponentComplex(static_cast<int>(n), std::move(components), std::move(points));
}

inline Json to_json(const std::vector<Violation>& violations) {
    Json out;
    out["valid"] = violations.empty();
    Json list = Json::array();
    for (const auto& v : violations) {
        Json item;
        item["point"] = v.point;
        item["meet"] = to_json(v.meet);
        list.push_back(std::move(item));
    }
    out["violations"] = std::move(list);
    return out;
}

// --- moduli ----------------------------------------------------------------

inline Json to_json(const SigmaStrata& s) {
    Json out;
    out["total"] = s.total;
    Json buckets = Json::object();
    for (const auto& [type, count] : s.buckets) buckets[type.to_string()] = count;
    out["buckets"] = std::move(buckets);
    out["residual"] = s.residual;
    return out;
}

inline Json to_json(const ModuliPair& pair) {
    Json out;
    out["phi"] = to_json(pair.phi);
    out["sigma"] = to_json(pair.sigma);
    return out;
}

// --- reduced ring ----------------------------------------------------------

inline Json to_json(const ProductRingElem& e) {
    Json out = Json::array();
    for (const auto& c : e.coords()) out.push_back(detail::big_to_json(c));
    return out;
}

inline ProductRingElem ring_elem_from_json(const Json& j) {
    if (!j.is_array()) detail::shape_error("ring element must be a JSON array of integers");
    std::vector<BigInt> coords;
    for (const auto& v : j) {
        if (v.is_number_integer()) {
            coords.emplace_back(v.get<long long>());
        } else if (v.is_string()) {
            coords.push_back(detail::parse_bigint(v.get<std::string>()));
        } else {
            detail::shape_error("ring element coordinates must be integers");
        }
    }
    return ProductRingElem(std::move(coords));
}

}  // namespace nilstrat::io

#endif
