#ifndef NILSTRAT_STRATIFICATION_HPP
#define NILSTRAT_STRATIFICATION_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monodromy.hpp"
#include "partition.hpp"

namespace nilstrat {

/*
 * Finite model of the irreducible components of a deformation space.
 *
 * Components carry a partition label (the generic monodromy type on that
 * component). Points carry only the set of components passing through
 * them; a point's own type is derived as the meet of those labels.
 *
 * The constructor enforces the structural invariants (labels of size n,
 * nonempty incidence sets naming known components). Whether each point's
 * label set actually attains its meet is a modeling assumption that
 * validate() checks on demand.
 */
class ComponentComplex {
public:
    using Id = std::string;

    ComponentComplex() = default;

    ComponentComplex(int n, std::map<Id, Partition> components, std::map<Id, std::vector<Id>> points)
        : m_n(n), m_components(std::move(components)), m_points(std::move(points)) {
        if (n < 1) fail(ErrorKind::invalid_argument, "complex size n must be positive");
        for (const auto& [id, label] : m_components) {
            if (label.size() != n) {
                fail(ErrorKind::size_mismatch,
                     "component " + id + " label " + label.to_string() + " is not a partition of " + std::to_string(n));
            }
        }
        for (auto& [id, incidence] : m_points) {
            if (incidence.empty()) fail(ErrorKind::invalid_argument, "point " + id + " lies on no component");
            std::sort(incidence.begin(), incidence.end());
            incidence.erase(std::unique(incidence.begin(), incidence.end()), incidence.end());
            for (const auto& c : incidence) {
                if (!m_components.count(c)) {
                    fail(ErrorKind::invalid_argument, "point " + id + " references unknown component " + c);
                }
            }
        }
    }

    int n() const noexcept { return m_n; }
    const std::map<Id, Partition>& components() const noexcept { return m_components; }
    const std::map<Id, std::vector<Id>>& points() const noexcept { return m_points; }

    const std::vector<Id>& incidence(const Id& point) const {
        auto it = m_points.find(point);
        if (it == m_points.end()) fail(ErrorKind::unknown_point, "point " + point);
        return it->second;
    }

    const Partition& label(const Id& component) const { return m_components.at(component); }

    /// Incident labels of a point, in component id order.
    std::vector<Partition> incident_labels(const Id& point) const {
        std::vector<Partition> labels;
        for (const auto& c : incidence(point)) labels.push_back(label(c));
        return labels;
    }

    friend bool operator==(const ComponentComplex&, const ComponentComplex&) = default;

private:
    int m_n = 1;
    std::map<Id, Partition> m_components;
    std::map<Id, std::vector<Id>> m_points;
};

struct Violation {
    ComponentComplex::Id point;
    Partition meet;  // the unattained meet of the incident labels

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Points whose incident labels do not attain their meet. Empty means valid.
inline std::vector<Violation> validate(const ComponentComplex& c) {
    std::vector<Violation> out;
    for (const auto& [id, incidence] : c.points()) {
        const auto labels = c.incident_labels(id);
        Partition m = labels.front();
        for (const auto& l : labels) m = meet(m, l);
        if (std::find(labels.begin(), labels.end(), m) == labels.end()) out.push_back({id, m});
    }
    return out;
}

inline bool is_valid(const ComponentComplex& c) { return validate(c).empty(); }

namespace detail {

inline void require_complex_size(const ComponentComplex& c, const Partition& mu) {
    if (mu.size() != c.n()) {
        fail(ErrorKind::size_mismatch,
             "partition " + mu.to_string() + " is not of the complex size " + std::to_string(c.n()));
    }
}

}  // namespace detail

/// Components whose label is dominated by mu, in id order.
inline std::vector<ComponentComplex::Id> stratum(const ComponentComplex& c, const Partition& mu) {
    detail::require_complex_size(c, mu);
    std::vector<ComponentComplex::Id> out;
    for (const auto& [id, label] : c.components()) {
        if (dominance_leq(label, mu)) out.push_back(id);
    }
    return out;
}

/// The minimal type mu_x of a point; model-violation if the meet of the
/// incident labels is not one of them.
inline Partition mu_of_point(const ComponentComplex& c, const ComponentComplex::Id& point) {
    const auto labels = c.incident_labels(point);
    auto m = minimum(labels);
    if (!m) fail(ErrorKind::model_violation, "point " + point);
    return *m;
}

/// An incident component whose label equals mu_x; the smallest id wins.
inline ComponentComplex::Id minimal_lift(const ComponentComplex& c, const ComponentComplex::Id& point) {
    const Partition target = mu_of_point(c, point);
    for (const auto& comp : c.incidence(point)) {
        if (c.label(comp) == target) return comp;
    }
    fail(ErrorKind::model_violation, "point " + point);
}

/// Whether the point lies on some component of type <= mu.
inline bool closure_test(const ComponentComplex& c, const ComponentComplex::Id& point, const Partition& mu) {
    detail::require_complex_size(c, mu);
    for (const auto& comp : c.incidence(point)) {
        if (dominance_leq(c.label(comp), mu)) return true;
    }
    return false;
}

struct ProductFactor {
    ComponentComplex complex;
    TameBlockSpec spec;
};

/// Separator between factor ids in product ids.
inline constexpr char product_id_separator = '*';

inline constexpr std::size_t default_product_cap = 10000;

/*
 * Product of per-block complexes. Tuple components are labeled by
 * total_type of their factor labels; tuple points lie on the product of
 * their factors' incidence sets. Ids join factor ids with '*'.
 */
inline ComponentComplex product_complex(std::span<const ProductFactor> factors,
                                        std::size_t cap = default_product_cap) {
    if (factors.empty()) fail(ErrorKind::empty_input, "product of no factors");
    std::size_t n_components = 1;
    std::size_t n_points = 1;
    int n = 0;
    for (const auto& f : factors) {
        f.spec.validate();
        n += f.spec.output_size(f.complex.n());
        n_components *= f.complex.components().size();
        n_points *= f.complex.points().size();
        if (n_components > cap || n_points > cap) {
            fail(ErrorKind::resource, "product exceeds the cap of " + std::to_string(cap) + " tuples");
        }
    }

    auto join_ids = [](const std::vector<const std::string*>& ids) {
        std::string out;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) out += product_id_separator;
            out += *ids[i];
        }
        return out;
    };

    std::map<ComponentComplex::Id, Partition> components;
    if (n_components > 0) {
        std::vector<std::map<ComponentComplex::Id, Partition>::const_iterator> it;
        for (const auto& f : factors) it.push_back(f.complex.components().begin());
        while (true) {
            std::vector<const std::string*> ids;
            std::vector<BlockInput> blocks;
            for (std::size_t k = 0; k < factors.size(); ++k) {
                ids.push_back(&it[k]->first);
                blocks.push_back({factors[k].spec, it[k]->second});
            }
            auto id = join_ids(ids);
            if (!components.emplace(id, total_type(blocks)).second) {
                fail(ErrorKind::invalid_argument, "product component id collision: " + id);
            }

            std::size_t k = factors.size();
            bool done = true;
            while (k > 0) {
                --k;
                if (++it[k] != factors[k].complex.components().end()) {
                    done = false;
                    break;
                }
                it[k] = factors[k].complex.components().begin();
            }
            if (done) break;
        }
    }

    std::map<ComponentComplex::Id, std::vector<ComponentComplex::Id>> points;
    if (n_points > 0) {
        std::vector<std::map<ComponentComplex::Id, std::vector<ComponentComplex::Id>>::const_iterator> it;
        for (const auto& f : factors) it.push_back(f.complex.points().begin());
        while (true) {
            std::vector<const std::string*> ids;
            for (std::size_t k = 0; k < factors.size(); ++k) ids.push_back(&it[k]->first);

            // Cartesian product of the factor incidence sets.
            std::vector<ComponentComplex::Id> incidence;
            std::vector<std::size_t> idx(factors.size(), 0);
            while (true) {
                std::vector<const std::string*> comp;
                for (std::size_t k = 0; k < factors.size(); ++k) comp.push_back(&it[k]->second[idx[k]]);
                incidence.push_back(join_ids(comp));
                std::size_t k = factors.size();
                bool done = true;
                while (k > 0) {
                    --k;
                    if (++idx[k] < it[k]->second.size()) {
                        done = false;
                        break;
                    }
                    idx[k] = 0;
                }
                if (done) break;
            }
            auto id = join_ids(ids);
            if (!points.emplace(id, std::move(incidence)).second) {
                fail(ErrorKind::invalid_argument, "product point id collision: " + id);
            }

            std::size_t k = factors.size();
            bool done = true;
            while (k > 0) {
                --k;
                if (++it[k] != factors[k].complex.points().end()) {
                    done = false;
                    break;
                }
                it[k] = factors[k].complex.points().begin();
            }
            if (done) break;
        }
    }

    return ComponentComplex(n, std::move(components), std::move(points));
}

}  // namespace nilstrat

#endif
