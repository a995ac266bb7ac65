#ifndef NILSTRAT_CLI_HPP
#define NILSTRAT_CLI_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "error.hpp"
#include "jordan.hpp"
#include "json_io.hpp"
#include "moduli.hpp"
#include "monodromy.hpp"
#include "partition.hpp"
#include "reduced.hpp"
#include "stratification.hpp"

namespace nilstrat::cli {

using io::Json;

enum class Format { json, table };

/// Exit codes: 0 success, 1 domain / input error, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

/*
 * Renders a result as an aligned text table. Objects become key/value rows
 * (nested objects flatten to dotted keys, arrays of objects become their
 * own table below); arrays of objects become one row per element; any
 * other value is a one-cell "result" table.
 */
class TableRenderer {
public:
    static std::string render(const Json& j) {
        std::string out;
        render_into(j, "", out);
        return out;
    }

private:
    static std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

    static bool is_object_array(const Json& v) {
        return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
    }

    static void emit(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                     std::string& out) {
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) {
            width[c] = header[c].size();
            for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                s += cells[c];
                if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
            }
            out += s + "\n";
        };
        line(header);
        std::vector<std::string> rule;
        for (auto w : width) rule.emplace_back(w, '-');
        line(rule);
        for (const auto& row : rows) line(row);
    }

    static void flatten(const Json& j, const std::string& prefix, std::vector<std::vector<std::string>>& rows,
                        std::vector<std::pair<std::string, const Json*>>& subtables) {
        for (const auto& [key, value] : j.items()) {
            const std::string name = prefix.empty() ? key : prefix + "." + key;
            if (value.is_object() && !value.empty()) {
                flatten(value, name, rows, subtables);
            } else if (is_object_array(value)) {
                subtables.emplace_back(name, &value);
            } else {
                rows.push_back({name, cell(value)});
            }
        }
    }

    static void render_into(const Json& j, const std::string& title, std::string& out) {
        if (!title.empty()) out += title + ":\n";
        if (j.is_object()) {
            std::vector<std::vector<std::string>> rows;
            std::vector<std::pair<std::string, const Json*>> subtables;
            flatten(j, "", rows, subtables);
            emit({"key", "value"}, rows, out);
            for (const auto& [name, sub] : subtables) {
                out += "\n";
                render_into(*sub, name, out);
            }
        } else if (is_object_array(j)) {
            std::vector<std::string> header;
            for (const auto& [key, value] : j.front().items()) header.push_back(key);
            std::vector<std::vector<std::string>> rows;
            for (const auto& e : j) {
                std::vector<std::string> row;
                for (const auto& key : header) row.push_back(e.contains(key) ? cell(e[key]) : "");
                rows.push_back(std::move(row));
            }
            emit(header, rows, out);
        } else {
            emit({"result"}, {{cell(j)}}, out);
        }
    }
};

namespace detail {

inline std::string read_stream(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// A JSON argument is inline when it starts with '[', '{' or '"', read from
/// standard input when it is "-", and otherwise names a file.
inline Json load(const std::string& arg, std::istream& in) {
    const auto first = std::find_if_not(arg.begin(), arg.end(), [](unsigned char c) { return std::isspace(c); });
    if (first != arg.end() && (*first == '[' || *first == '{' || *first == '"')) return io::parse(arg);
    if (arg == "-") return io::parse(read_stream(in));
    std::ifstream file(arg);
    if (!file) fail(ErrorKind::io, "cannot read " + arg);
    return io::parse(read_stream(file));
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact partition, Jordan-type and component-stratification toolkit", "nilstrat"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "json";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    std::function<Json()> action;
    std::vector<std::string> warnings;

    // Inputs shared by several leaves.
    std::string mu, nu, alpha, beta, set, matrix, complex, point, blocks, factors, element;
    int mult = 1;
    std::optional<std::uint64_t> modulus;
    bool by_matrix = false;
    std::uint64_t q = 1, p = 2, a = 1;
    std::size_t r = 1;
    std::optional<std::uint64_t> cap;
    std::size_t product_cap = default_product_cap;

    auto partition_arg = [&](const std::string& value) { return io::partition_from_json(detail::load(value, in)); };

    // partition ...
    auto* partition = app.add_subcommand("partition", "Dominance-lattice operations on partitions");
    partition->require_subcommand(1);
    {
        auto* c = partition->add_subcommand("conjugate", "Conjugate partition");
        c->add_option("--mu", mu, "Partition as a JSON array")->required();
        c->callback([&] { action = [&] { return io::to_json(conjugate(partition_arg(mu))); }; });

        auto* d = partition->add_subcommand("dominates", "Whether mu <= nu in dominance order");
        d->add_option("--mu", mu)->required();
        d->add_option("--nu", nu)->required();
        d->callback([&] { action = [&] { return Json(dominance_leq(partition_arg(mu), partition_arg(nu))); }; });

        auto* m = partition->add_subcommand("meet", "Greatest lower bound");
        m->add_option("--mu", mu)->required();
        m->add_option("--nu", nu)->required();
        m->callback([&] { action = [&] { return io::to_json(meet(partition_arg(mu), partition_arg(nu))); }; });

        auto* j = partition->add_subcommand("join", "Least upper bound");
        j->add_option("--mu", mu)->required();
        j->add_option("--nu", nu)->required();
        j->callback([&] { action = [&] { return io::to_json(join(partition_arg(mu), partition_arg(nu))); }; });

        auto* mn = partition->add_subcommand("min", "Minimum of a set of partitions, or null");
        mn->add_option("--set", set, "JSON array of partitions")->required();
        mn->callback([&] {
            action = [&] {
                const auto j = detail::load(set, in);
                if (!j.is_array()) fail(ErrorKind::parse, "--set must be a JSON array of partitions");
                std::vector<Partition> members;
                for (const auto& e : j) members.push_back(io::partition_from_json(e));
                const auto m = minimum(members);
                return m ? io::to_json(*m) : Json(nullptr);
            };
        });
    }

    // jordan ...
    auto* jordan = app.add_subcommand("jordan", "Nilpotent matrices and Jordan types");
    jordan->require_subcommand(1);
    {
        auto* m = jordan->add_subcommand("matrix", "Jordan-form nilpotent matrix of a partition");
        m->add_option("--mu", mu)->required();
        m->add_option("--modulus", modulus, "Build over F_p instead of the rationals");
        m->callback([&] {
            action = [&] {
                const auto type = partition_arg(mu);
                if (modulus) return io::to_json(jordan_matrix(type, PrimeField(*modulus)));
                return io::to_json(jordan_matrix(type));
            };
        });

        auto* t = jordan->add_subcommand("type", "Jordan type of a nilpotent matrix");
        t->add_option("--matrix", matrix, "Matrix JSON (inline, file, or - for stdin)")->required();
        t->callback([&] {
            action = [&] {
                const auto m = io::matrix_from_json(detail::load(matrix, in));
                return std::visit([](const auto& v) { return io::to_json(jordan_type(v)); }, m);
            };
        });

        auto* l = jordan->add_subcommand("log", "Logarithm of a unipotent rational matrix");
        l->add_option("--matrix", matrix)->required();
        l->callback([&] {
            action = [&] {
                const auto m = io::matrix_from_json(detail::load(matrix, in));
                return std::visit([](const auto& v) { return io::to_json(unipotent_log(v)); }, m);
            };
        });
    }

    // monodromy ...
    auto* mono = app.add_subcommand("monodromy", "Jordan-type calculus");
    mono->require_subcommand(1);
    {
        auto* t = mono->add_subcommand("tensor", "Jordan type of N_alpha (x) 1 + 1 (x) N_beta");
        t->add_option("--alpha", alpha)->required();
        t->add_option("--beta", beta)->required();
        t->add_flag("--by-matrix", by_matrix, "Compute from the explicit Kronecker-sum matrix");
        t->callback([&] {
            action = [&] {
                const auto x = partition_arg(alpha);
                const auto y = partition_arg(beta);
                return io::to_json(by_matrix ? tensor_type_by_matrix(x, y) : tensor_type(x, y));
            };
        });

        auto* d = mono->add_subcommand("dsum", "Jordan type of a direct sum");
        d->add_option("--alpha", alpha)->required();
        d->add_option("--beta", beta)->required();
        d->callback([&] {
            action = [&] { return io::to_json(direct_sum_type(partition_arg(alpha), partition_arg(beta))); };
        });

        auto* i = mono->add_subcommand("induce", "Replicate a type mult times");
        i->add_option("--alpha", alpha)->required();
        i->add_option("--mult", mult)->required();
        i->callback([&] { action = [&] { return io::to_json(induced_type(partition_arg(alpha), mult)); }; });

        auto* t2 = mono->add_subcommand("total", "Total type over tame blocks");
        t2->add_option("--blocks", blocks, "JSON array of {spec, alpha}")->required();
        t2->callback([&] {
            action = [&] { return io::to_json(total_type(io::blocks_from_json(detail::load(blocks, in)))); };
        });
    }

    // strat ...
    auto* strat = app.add_subcommand("strat", "Component-complex queries");
    strat->require_subcommand(1);
    {
        auto complex_arg = [&] { return io::complex_from_json(detail::load(complex, in)); };

        auto* v = strat->add_subcommand("validate", "List points whose incident labels miss their meet");
        v->add_option("--complex", complex)->required();
        v->callback([&, complex_arg] { action = [&, complex_arg] { return io::to_json(validate(complex_arg())); }; });

        auto* s = strat->add_subcommand("stratum", "Components with label <= mu");
        s->add_option("--complex", complex)->required();
        s->add_option("--mu", mu)->required();
        s->callback([&, complex_arg] {
            action = [&, complex_arg] { return Json(stratum(complex_arg(), partition_arg(mu))); };
        });

        auto* m = strat->add_subcommand("mu", "Minimal type of a point");
        m->add_option("--complex", complex)->required();
        m->add_option("--point", point)->required();
        m->callback([&, complex_arg] {
            action = [&, complex_arg] { return io::to_json(mu_of_point(complex_arg(), point)); };
        });

        auto* ml = strat->add_subcommand("minimal-lift", "Component through a point realizing its minimal type");
        ml->add_option("--complex", complex)->required();
        ml->add_option("--point", point)->required();
        ml->callback([&, complex_arg] {
            action = [&, complex_arg] { return Json(minimal_lift(complex_arg(), point)); };
        });

        auto* cl = strat->add_subcommand("closure", "Whether a point lies on a component of type <= mu");
        cl->add_option("--complex", complex)->required();
        cl->add_option("--point", point)->required();
        cl->add_option("--mu", mu)->required();
        cl->callback([&, complex_arg] {
            action = [&, complex_arg] { return Json(closure_test(complex_arg(), point, partition_arg(mu))); };
        });

        auto* pr = strat->add_subcommand("product", "Product complex of per-block factors");
        pr->add_option("--factors", factors, "JSON array of {complex, spec}")->required();
        pr->add_option("--cap", product_cap, "Maximum tuple components")->capture_default_str();
        pr->callback([&] {
            action = [&] {
                const auto j = detail::load(factors, in);
                if (!j.is_array()) fail(ErrorKind::parse, "--factors must be a JSON array of {complex, spec}");
                std::vector<ProductFactor> parts;
                for (const auto& f : j) {
                    if (!f.is_object() || !f.contains("complex") || !f.contains("spec")) {
                        fail(ErrorKind::parse, "each factor needs \"complex\" and \"spec\"");
                    }
                    parts.push_back({io::complex_from_json(f["complex"]), io::spec_from_json(f["spec"])});
                }
                return io::to_json(product_complex(parts, product_cap));
            };
        });
    }

    // moduli ...
    auto* moduli = app.add_subcommand("moduli", "Finite-field points of Phi Sigma Phi^-1 = Sigma^q");
    moduli->require_subcommand(1);
    {
        auto instance = [&](std::optional<std::uint64_t> exponent) {
            ModuliInstance inst;
            inst.q = q;
            inst.r = r;
            inst.p = p;
            inst.a = exponent;
            if (cap) {
                if (*cap > default_pair_cap) {
                    warnings.push_back("cap raised to " + std::to_string(*cap) + " candidate pairs (default " +
                                       std::to_string(default_pair_cap) + ")");
                }
                inst.cap = *cap;
            }
            return inst;
        };
        auto common = [&](CLI::App* c) {
            c->add_option("--q", q, "Relation exponent")->required();
            c->add_option("--r", r, "Matrix size")->required();
            c->add_option("--p", p, "Field characteristic")->required();
            c->add_option("--cap", cap, "Maximum candidate pairs p^(2r^2)");
        };

        auto* e = moduli->add_subcommand("enumerate", "List all solution pairs");
        common(e);
        e->callback([&, instance] {
            action = [&, instance] {
                const auto pairs = enumerate_pairs(instance(std::nullopt));
                Json out;
                out["total"] = pairs.size();
                Json list = Json::array();
                for (const auto& pair : pairs) {
                    Json item;
                    item["phi"] = io::to_json(pair.phi)["entries"];
                    item["sigma"] = io::to_json(pair.sigma)["entries"];
                    list.push_back(std::move(item));
                }
                out["pairs"] = std::move(list);
                return out;
            };
        });

        auto* s = moduli->add_subcommand("stratify", "Bucket pairs by the Jordan type of Sigma^a - I");
        common(s);
        s->add_option("--a", a, "Exponent a")->required();
        s->callback([&, instance] {
            action = [&, instance] { return io::to_json(sigma_stratify(instance(a))); };
        });

        auto* o = moduli->add_subcommand("orbits", "Count simultaneous-conjugacy orbits of solutions");
        common(o);
        o->callback([&, instance] {
            action = [&, instance] {
                const auto inst = instance(std::nullopt);
                Json out;
                out["total"] = enumerate_pairs(inst).size();
                out["orbits"] = orbit_count(inst);
                return out;
            };
        });
    }

    // reduced ...
    auto* reduced = app.add_subcommand("reduced", "Product-of-domains ring model");
    reduced->require_subcommand(1);
    {
        auto* c = reduced->add_subcommand("complement", "s with r s = 0 and r + s regular");
        c->add_option("--r", element, "JSON integer array")->required();
        c->callback([&] {
            action = [&] { return io::to_json(regular_complement(io::ring_elem_from_json(detail::load(element, in)))); };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage: " << e.what() << "\n";
        return exit_usage;
    }

    const Format format = format_name == "table" ? Format::table : Format::json;
    try {
        const Json result = action();
        for (const auto& w : warnings) err << "warning: " << w << "\n";
        out << (format == Format::json ? io::dump(result) + "\n" : TableRenderer::render(result));
        return exit_ok;
    } catch (const Error& e) {
        err << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_domain;
    }
}

}  // namespace nilstrat::cli

#endif
