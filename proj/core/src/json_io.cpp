// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "intdec/json_io.hpp"

#include <json.hpp>

#include "intdec/compile.hpp"
#include "intdec/error.hpp"

namespace intdec::json_io {

namespace {

using nlohmann::json;
namespace dec = intdec::decimal;
namespace pres = intdec::presburger;

json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

Integer integer_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        Integer z;
        if (s.empty() || z.set_str(s, 10) != 0) throw InvalidArgument(std::string(what) + ": '" + s + "' is not an integer");
        return z;
    }
    throw InvalidArgument(std::string(what) + " must be an integer");
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object()) throw InvalidArgument(std::string("expected an object holding \"") + key + "\"");
    auto it = obj.find(key);
    if (it == obj.end()) throw InvalidArgument(std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t count_from_json(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        throw InvalidArgument(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

const json& square_matrix(const json& j, std::size_t size, const char* what) {
    if (!j.is_array() || j.size() != size) {
        throw InvalidArgument(std::string(what) + " must have " + std::to_string(size) + " rows");
    }
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != size) {
            throw InvalidArgument(std::string(what) + " rows must have " + std::to_string(size) + " entries");
        }
    }
    return j;
}

const char* relation_name(dec::Relation r) {
    switch (r) {
    case dec::Relation::kLe: return "le";
    case dec::Relation::kLt: return "lt";
    case dec::Relation::kEq: return "eq";
    }
    return "le";
}

dec::Relation relation_from_json(const json& j) {
    if (j == "le") return dec::Relation::kLe;
    if (j == "lt") return dec::Relation::kLt;
    if (j == "eq") return dec::Relation::kEq;
    throw InvalidArgument("relation must be \"le\", \"lt\" or \"eq\"");
}

json parse_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

dbm::Dbm dbm_from_json(const json& j) {
    const std::size_t n = count_from_json(field(j, "n"), "n");
    const json& rows = square_matrix(field(j, "bounds"), n + 1, "bounds");
    dbm::Dbm m(n);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t k = 0; k <= n; ++k) {
            const json& entry = rows[i][k];
            const json& value = field(entry, "value");
            const bool strict = entry.contains("strict") && entry["strict"].get<bool>();
            if (value == "inf") {
                m.set(i, k, dbm::Bound::infinity());
            } else {
                m.set(i, k, {integer_from_json(value, "bound value"), strict});
            }
        }
    }
    return m;
}

dbm::CpDbmPlus cpdbm_from_json(const json& j) {
    if (j.is_object() && j.contains("bounds")) return dbm::constant(dbm_from_json(j));
    const std::size_t n = count_from_json(field(j, "n"), "n");
    const std::size_t params = (n + 1) * (n + 1);
    const json& relations = square_matrix(field(j, "relations"), n + 1, "relations");
    std::vector<bool> strict(params);
    std::vector<bool> infinite(params, false);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t k = 0; k <= n; ++k) {
            const json& r = relations[i][k];
            if (r != "le" && r != "lt") throw InvalidArgument("DBM relations must be \"le\" or \"lt\"");
            strict[dbm::parameter_index(n, i, k)] = r == "lt";
        }
    }
    if (j.contains("infinite")) {
        const json& inf = square_matrix(j["infinite"], n + 1, "infinite");
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t k = 0; k <= n; ++k) {
                if (!inf[i][k].is_boolean()) throw InvalidArgument("infinite entries must be booleans");
                infinite[dbm::parameter_index(n, i, k)] = inf[i][k].get<bool>();
            }
        }
    }
    const json& phi_text = field(j, "phi");
    if (!phi_text.is_string()) throw InvalidArgument("phi must be formula text");
    frontend::VarContext ctx;
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t k = 0; k <= n; ++k) ctx.push_back({parameter_name(i, k), frontend::Sort::kInt});
    }
    auto formula = frontend::parse(phi_text.get_ref<const std::string&>());
    // every parameter is integral, so the label of the cell at d = 0 is phi
    IntegerSet phi = frontend::compile(*formula, ctx).integer_points();
    return dbm::CpDbmPlus(n, std::move(strict), std::move(infinite), std::move(phi));
}

}  // namespace

std::string parameter_name(std::size_t i, std::size_t j) {
    return "c_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string export_idf(const IdfSet& f, int indent) {
    json cells = json::array();
    for (const auto& cell : f.cells()) {
        const auto& z = cell.zpart;
        json accepting = json::array();
        json transitions = json::array();
        for (pres::State s = 0; s < z.state_count(); ++s) {
            if (z.accepting(s)) accepting.push_back(s);
            json row = json::array();
            for (pres::Letter a = 0; a < z.letter_count(); ++a) row.push_back(z.next(s, a));
            transitions.push_back(std::move(row));
        }
        json regions = json::array();
        for (const auto& region : cell.dpart.regions()) {
            json constraints = json::array();
            for (const auto& c : region.proper_constraints()) {
                json coeffs = json::array();
                for (const auto& a : c.coeffs) coeffs.push_back(integer_to_json(a));
                constraints.push_back(
                    {{"coeffs", std::move(coeffs)}, {"rel", relation_name(c.relation)}, {"const", integer_to_json(c.constant)}});
            }
            regions.push_back(std::move(constraints));
        }
        cells.push_back({{"z",
                          {{"states", z.state_count()},
                           {"initial", z.initial()},
                           {"accepting", std::move(accepting)},
                           {"transitions", std::move(transitions)}}},
                         {"d", std::move(regions)}});
    }
    json out = {{"dim", f.dimension()}, {"cells", std::move(cells)}};
    return out.dump(indent);
}

IdfSet import_idf(std::string_view text) {
    const json j = parse_text(text);
    try {
        const std::size_t n = count_from_json(field(j, "dim"), "dim");
        if (n > pres::dimension_limit()) {
            throw CapacityError("dimension " + std::to_string(n) + " exceeds the limit " +
                                std::to_string(pres::dimension_limit()));
        }
        const json& cells_json = field(j, "cells");
        if (!cells_json.is_array()) throw InvalidArgument("cells must be an array");
        std::vector<Cell> cells;
        for (const auto& cj : cells_json) {
            const json& z = field(cj, "z");
            const std::size_t states = count_from_json(field(z, "states"), "states");
            const auto initial = static_cast<pres::State>(count_from_json(field(z, "initial"), "initial"));
            std::vector<bool> accepting(states, false);
            for (const auto& s : field(z, "accepting")) {
                const std::size_t k = count_from_json(s, "accepting state");
                if (k >= states) throw InvalidArgument("accepting state out of range");
                accepting[k] = true;
            }
            const json& rows = field(z, "transitions");
            if (!rows.is_array() || rows.size() != states) throw InvalidArgument("one transition row per state");
            std::vector<pres::State> transitions;
            for (const auto& row : rows) {
                if (!row.is_array() || row.size() != (std::size_t{1} << n)) {
                    throw InvalidArgument("transition rows need one entry per letter");
                }
                for (const auto& t : row) transitions.push_back(static_cast<pres::State>(count_from_json(t, "state")));
            }
            IntegerSet zpart = IntegerSet::from_automaton(n, initial, std::move(accepting), std::move(transitions));
            if (!pres::is_saturated(zpart)) throw InvalidArgument("automaton is not saturated");

            std::vector<dec::ConvexRegion> regions;
            for (const auto& rj : field(cj, "d")) {
                std::vector<dec::LinearConstraint> cs;
                for (const auto& c : rj) {
                    dec::LinearConstraint lc;
                    for (const auto& a : field(c, "coeffs")) lc.coeffs.push_back(integer_from_json(a, "coefficient"));
                    if (lc.coeffs.size() != n) throw InvalidArgument("constraint has the wrong number of coefficients");
                    lc.relation = relation_from_json(field(c, "rel"));
                    lc.constant = integer_from_json(field(c, "const"), "constant");
                    cs.push_back(std::move(lc));
                }
                regions.emplace_back(n, std::move(cs));
            }
            cells.push_back({std::move(zpart), DecimalSet::from_regions(n, std::move(regions))});
        }
        IdfSet f = IdfSet::from_cells(n, std::move(cells));
        f.check_invariants();
        return f;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed set: ") + e.what());
    } catch (const CapacityError&) {
        throw;
    } catch (const InvalidArgument&) {
        throw;
    } catch (const Error& e) {
        throw InvalidArgument(std::string("invalid set: ") + e.what());
    }
}

std::vector<dbm::CpDbmPlus> parse_cpdbm(std::string_view text) {
    const json j = parse_text(text);
    try {
        std::vector<dbm::CpDbmPlus> out;
        if (j.is_array()) {
            if (j.empty()) throw InvalidArgument("empty list of parametric DBMs");
            for (const auto& item : j) out.push_back(cpdbm_from_json(item));
        } else {
            out.push_back(cpdbm_from_json(j));
        }
        return out;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed parametric DBM: ") + e.what());
    }
}

dbm::Dbm parse_dbm(std::string_view text) {
    const json j = parse_text(text);
    try {
        return dbm_from_json(j);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed DBM: ") + e.what());
    }
}

std::string export_dbm(const dbm::Dbm& m, int indent) {
    const std::size_t n = m.clocks();
    json rows = json::array();
    for (std::size_t i = 0; i <= n; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k <= n; ++k) {
            const auto& b = m.at(i, k);
            row.push_back({{"value", b.is_infinite() ? json("inf") : integer_to_json(*b.value)}, {"strict", b.strict}});
        }
        rows.push_back(std::move(row));
    }
    return json({{"n", n}, {"bounds", std::move(rows)}}).dump(indent);
}

}  // namespace intdec::json_io
