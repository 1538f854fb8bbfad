#pragma once

/**
 * @file io.hpp
 * @brief Stable JSON and text renderings of reports, censuses and tables.
 *
 * JSON uses insertion-ordered objects so the documents are byte-stable;
 * the golden CLI tests diff both the JSON and the text forms.
 */

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdzp/algebra.hpp"
#include "cdzp/fibring.hpp"
#include "cdzp/potency.hpp"

namespace cdzp {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const Witnesses& w) {
    ojson j = ojson::object();
    if (w.m) j["m"] = *w.m;
    if (w.M) j["M"] = *w.M;
    if (w.theta) j["theta"] = *w.theta;
    if (w.tau) j["tau"] = *w.tau;
    if (w.upsilon) j["upsilon"] = *w.upsilon;
    return j;
}

inline ojson to_json(const PotencyReport& r) {
    ojson j;
    j["class"] = to_string(r.cls);
    j["k"] = r.k ? ojson(*r.k) : ojson(nullptr);
    j["s"] = r.s ? ojson(*r.s) : ojson(nullptr);
    j["route"] = to_string(r.route);
    j["witnesses"] = to_json(r.witnesses);
    j["trace"] = r.trace;
    j["norm"] = r.norm;
    if (r.mk) j["mk"] = ojson::array({r.mk->first, r.mk->second});
    return j;
}

inline std::string witnesses_line(const Witnesses& w) {
    std::string out;
    auto put = [&out](const char* name, const std::optional<std::uint64_t>& v) {
        if (!v) return;
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += std::to_string(*v);
    };
    put("m", w.m);
    put("M", w.M);
    put("theta", w.theta);
    put("tau", w.tau);
    put("upsilon", w.upsilon);
    return out;
}

inline std::string report_text(const Element& z, const PotencyReport& r) {
    std::string out;
    out += "element: " + to_display_string(z) + "\n";
    out += "algebra: p=" + std::to_string(z.algebra().p()) +
           " t=" + std::to_string(z.algebra().level()) +
           " dim=" + std::to_string(z.algebra().dim()) + "\n";
    out += std::string("class: ") + to_string(r.cls) + "\n";
    if (r.cls == PotencyClass::Nilpotent) out += "index: 2\n";
    if (r.k) out += "k: " + std::to_string(*r.k) + "\n";
    if (r.s) out += "s: " + std::to_string(*r.s) + "\n";
    out += std::string("route: ") + to_string(r.route) + "\n";
    out += "trace: " + std::to_string(r.trace) + "\n";
    out += "norm: " + std::to_string(r.norm) + "\n";
    std::string w = witnesses_line(r.witnesses);
    if (!w.empty()) out += "witnesses: " + w + "\n";
    return out;
}

inline ojson to_json(const Census& c) {
    ojson j;
    j["p"] = c.p;
    j["t"] = c.t;
    j["total"] = c.total;
    j["zero"] = c.zero;
    j["nilpotent"] = c.nilpotent;
    j["k_potent_total"] = c.k_potent_total();
    ojson counts = ojson::object();
    for (const auto& [k, n] : c.k_potent) counts[std::to_string(k)] = n;
    j["k_potent"] = counts;
    j["unclassified"] = c.unclassified;
    return j;
}

inline std::string census_text(const Census& c) {
    std::string out;
    out += "census p=" + std::to_string(c.p) + " t=" + std::to_string(c.t) +
           "\n";
    out += "total: " + std::to_string(c.total) + "\n";
    out += "zero: " + std::to_string(c.zero) + "\n";
    out += "nilpotent: " + std::to_string(c.nilpotent) + "\n";
    out += "k-potent: " + std::to_string(c.k_potent_total()) + "\n";
    for (const auto& [k, n] : c.k_potent)
        out += "  k=" + std::to_string(k) + ": " + std::to_string(n) + "\n";
    out += "unclassified: " + std::to_string(c.unclassified) + "\n";
    return out;
}

namespace detail {

inline std::string grid(const std::vector<std::string>& labels,
                        const std::vector<std::vector<std::string>>& cells) {
    std::size_t width = 1;
    for (const auto& l : labels) width = std::max(width, l.size());
    for (const auto& row : cells)
        for (const auto& c : row) width = std::max(width, c.size());
    auto pad = [width](const std::string& s) {
        return std::string(width - s.size(), ' ') + s;
    };
    std::string out = pad("") + " |";
    for (const auto& l : labels) out += " " + pad(l);
    out += "\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += pad(labels[i]) + " |";
        for (const auto& c : cells[i]) out += " " + pad(c);
        out += "\n";
    }
    return out;
}

}  // namespace detail

/// Carrier label: member slots are F0, F1, ...; the zero slot is "0".
inline std::string carrier_label(const RingTables& t, std::size_t i) {
    return i == t.zero_index() ? std::string("0") : "F" + std::to_string(i);
}

inline std::string ring_tables_text(const RingTables& t) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < t.size(); ++i)
        labels.push_back(carrier_label(t, i));
    auto table = [&](bool mul) {
        std::vector<std::vector<std::string>> cells(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j)
                cells[i].push_back(carrier_label(
                    t, mul ? t.mul_at(i, j) : t.add_at(i, j)));
        return detail::grid(labels, cells);
    };
    return "addition table:\n" + table(false) + "\nmultiplication table:\n" +
           table(true);
}

inline std::string ring_report_text(const RingTables& t, const RingReport& r) {
    auto flag = [](bool b) { return b ? "yes" : "NO"; };
    std::string out;
    out += "order: " + std::to_string(r.order) + "\n";
    out += std::string("additive closed: ") + flag(r.add_closed) + "\n";
    out += std::string("additive commutative: ") + flag(r.add_commutative) +
           "\n";
    out += std::string("additive associative: ") + flag(r.add_associative) +
           "\n";
    out += std::string("zero neutral: ") + flag(r.zero_neutral) + "\n";
    out += std::string("negatives exist: ") + flag(r.negatives_exist) + "\n";
    out += "additive exponent: " + std::to_string(r.additive_exponent) + "\n";
    if (r.order == 9 && r.additive_exponent == 3)
        out += "additive group: Z3 x Z3\n";
    out += std::string("multiplicative closed: ") + flag(r.mul_closed) + "\n";
    out += std::string("multiplicative associative: ") +
           flag(r.mul_associative) + "\n";
    out += std::string("left distributive: ") + flag(r.left_distributive) +
           "\n";
    out += std::string("right distributive: ") + flag(r.right_distributive) +
           "\n";
    if (r.noncommutative_witness) {
        auto [i, j] = *r.noncommutative_witness;
        out += "noncommutative: " + carrier_label(t, i) + "*" +
               carrier_label(t, j) + " = " +
               carrier_label(t, t.mul_at(i, j)) + " but " +
               carrier_label(t, j) + "*" + carrier_label(t, i) + " = " +
               carrier_label(t, t.mul_at(j, i)) + "\n";
    } else {
        out += "noncommutative: no witness\n";
    }
    out += "left identities:";
    for (std::size_t e : r.left_identities) out += " " + carrier_label(t, e);
    if (r.left_identities.empty()) out += " none";
    out += "\n";
    if (r.has_two_sided_unity) {
        out += "two-sided unity: present\n";
    } else {
        out += "two-sided unity: none";
        if (!r.right_failures.empty()) {
            auto [e, x] = r.right_failures.front();
            out += " (" + carrier_label(t, x) + "*" + carrier_label(t, e) +
                   " = " + carrier_label(t, t.mul_at(x, e)) + " != " +
                   carrier_label(t, x) + ")";
        }
        out += "\n";
    }
    return out;
}

inline ojson to_json(const RingTables& t, const RingReport& r) {
    ojson j;
    j["p"] = t.set.p.value();
    j["pisano"] = t.set.period();
    ojson carrier = ojson::array(), labels = ojson::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        carrier.push_back(to_coeff_string(t.carrier[i]));
        labels.push_back(carrier_label(t, i));
    }
    j["carrier"] = carrier;
    j["labels"] = labels;
    auto matrix = [&](bool mul) {
        ojson rows = ojson::array();
        for (std::size_t i = 0; i < t.size(); ++i) {
            ojson row = ojson::array();
            for (std::size_t j2 = 0; j2 < t.size(); ++j2)
                row.push_back(mul ? t.mul_at(i, j2) : t.add_at(i, j2));
            rows.push_back(row);
        }
        return rows;
    };
    j["add"] = matrix(false);
    j["mul"] = matrix(true);
    ojson rep;
    rep["order"] = r.order;
    rep["add_closed"] = r.add_closed;
    rep["add_commutative"] = r.add_commutative;
    rep["add_associative"] = r.add_associative;
    rep["zero_neutral"] = r.zero_neutral;
    rep["negatives_exist"] = r.negatives_exist;
    rep["additive_exponent"] = r.additive_exponent;
    rep["mul_closed"] = r.mul_closed;
    rep["mul_associative"] = r.mul_associative;
    rep["left_distributive"] = r.left_distributive;
    rep["right_distributive"] = r.right_distributive;
    if (r.noncommutative_witness)
        rep["noncommutative_witness"] = ojson::array(
            {r.noncommutative_witness->first, r.noncommutative_witness->second});
    else
        rep["noncommutative_witness"] = nullptr;
    rep["left_identities"] = r.left_identities;
    rep["has_two_sided_unity"] = r.has_two_sided_unity;
    j["report"] = rep;
    return j;
}

/// Text grid of the structure constants f_i f_j.
inline std::string basis_table_text(const BasisTable& table) {
    const Algebra& alg = table.algebra();
    const std::size_t n = alg.dim();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : unit_name(alg.level(), i));
    std::vector<std::vector<std::string>> cells(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = table.entry(i, j);
            std::string cell;
            if (e.index == 0) {
                cell = std::to_string(e.scale);
            } else {
                if (e.scale != 1) cell = std::to_string(e.scale);
                cell += unit_name(alg.level(), e.index);
            }
            cells[i].push_back(cell);
        }
    }
    std::string head = "basis products p=" + std::to_string(alg.p()) +
                       " t=" + std::to_string(alg.level()) + " deltas=";
    for (std::size_t i = 0; i < alg.deltas().size(); ++i) {
        if (i != 0) head += ',';
        head += std::to_string(alg.deltas()[i]);
    }
    return head + "\n" + detail::grid(labels, cells);
}

}  // namespace cdzp
