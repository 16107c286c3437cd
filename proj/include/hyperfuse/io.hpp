#pragma once

// The single-file text format for hypergroups and fusion rings.
//
//   # comment
//   [hypergroup]            (or [fusion]; hypergroup when omitted)
//   name = fibonacci        (optional)
//   field = 5               (optional radicand declaration, hypergroup only)
//   elements = e, tau
//   involution = e, tau
//   tau*tau = e:(3-1*sqrt(5))/2, tau:(-1+1*sqrt(5))/2
//
// Products involving the identity may be omitted (unit law); every other
// product must be present. A bare label stands for coefficient 1. Scalar
// literals follow the exact grammar of parse_scalar. Rejections carry
// line/column positions.

#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hyperfuse/fusion.hpp"
#include "hyperfuse/hypergroup.hpp"

namespace hyperfuse {

struct LoadedObject {
    std::string name;
    std::variant<Hypergroup, FusionRing> value;

    bool is_fusion() const { return std::holds_alternative<FusionRing>(value); }
    const Hypergroup& hypergroup() const { return std::get<Hypergroup>(value); }
    const FusionRing& fusion() const { return std::get<FusionRing>(value); }
};

namespace detail {

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::string last = strip(cur);
    if (!last.empty() || !out.empty()) out.push_back(last);
    return out;
}

inline bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '[' || c == ']' ||
              c == '\''))
            return false;
    return true;
}

} // namespace detail

inline LoadedObject load_object(std::istream& in) {
    bool fusion_mode = false;
    bool saw_header = false;
    std::string name;
    std::optional<std::int64_t> field;
    std::vector<std::string> elements;
    std::vector<std::string> involution_labels;
    std::map<std::pair<int, int>, std::pair<std::string, int>> products; // (i,j) -> (rhs, line)

    auto index_of = [&](const std::string& lbl) {
        for (size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == lbl) return static_cast<int>(i);
        return -1;
    };

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = detail::strip(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (saw_header || !elements.empty())
                throw parse_error("unexpected section header", lineno, 1);
            if (line == "[hypergroup]") fusion_mode = false;
            else if (line == "[fusion]") fusion_mode = true;
            else throw parse_error("unknown header '" + line + "'", lineno, 1);
            saw_header = true;
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'key = value'", lineno, 1);
        std::string key = detail::strip(line.substr(0, eq));
        std::string val = detail::strip(line.substr(eq + 1));

        if (key == "name") {
            name = val;
        } else if (key == "field") {
            if (fusion_mode) throw parse_error("field declaration not allowed in fusion files", lineno, 1);
            try {
                field = std::stoll(val);
            } catch (...) {
                throw parse_error("field must be an integer radicand", lineno, static_cast<int>(eq) + 2);
            }
            if (*field < 0) throw parse_error("field radicand must be nonnegative", lineno, 1);
            // normalize to the square-free part a literal would reduce to
            *field = QuadScalar(Rational(0), Rational(1), *field).radicand();
        } else if (key == "elements") {
            if (!elements.empty()) throw parse_error("duplicate elements line", lineno, 1);
            for (const auto& lbl : detail::split_commas(val)) {
                if (!detail::valid_label(lbl))
                    throw parse_error("invalid element label '" + lbl + "'", lineno, 1);
                elements.push_back(lbl);
            }
            if (elements.empty()) throw parse_error("empty element list", lineno, 1);
        } else if (key == "involution") {
            if (elements.empty()) throw parse_error("involution before elements", lineno, 1);
            involution_labels = detail::split_commas(val);
            if (involution_labels.size() != elements.size())
                throw parse_error("involution list length differs from elements", lineno, 1);
        } else if (key.find('*') != std::string::npos) {
            if (elements.empty()) throw parse_error("product before elements", lineno, 1);
            auto star_pos = key.find('*');
            std::string li = detail::strip(key.substr(0, star_pos));
            std::string lj = detail::strip(key.substr(star_pos + 1));
            int i = index_of(li), j = index_of(lj);
            if (i < 0) throw parse_error("unknown element '" + li + "'", lineno, 1);
            if (j < 0) throw parse_error("unknown element '" + lj + "'", lineno, 1);
            if (products.count({i, j}))
                throw parse_error("duplicate product '" + li + "*" + lj + "'", lineno, 1);
            products[{i, j}] = {val, lineno};
        } else {
            throw parse_error("unknown key '" + key + "'", lineno, 1);
        }
    }

    if (elements.empty()) throw parse_error("missing elements line", lineno, 1);
    if (involution_labels.empty()) throw parse_error("missing involution line", lineno, 1);

    const int n = static_cast<int>(elements.size());
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) {
        int t = index_of(involution_labels[i]);
        if (t < 0)
            throw parse_error("involution names unknown element '" + involution_labels[i] + "'", 1, 1);
        inv[i] = t;
    }

    // every non-identity product must be present
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            if (!products.count({i, j}))
                throw parse_error("missing product '" + elements[i] + "*" + elements[j] + "'",
                                  lineno, 1);

    auto parse_terms = [&](const std::string& rhs, int line, auto&& put) {
        if (detail::strip(rhs).empty()) return;
        for (const auto& term : detail::split_commas(rhs)) {
            auto colon = term.find(':');
            std::string lbl = detail::strip(colon == std::string::npos ? term : term.substr(0, colon));
            int t = index_of(lbl);
            if (t < 0) throw parse_error("unknown element '" + lbl + "' in product", line, 1);
            std::string coeff = colon == std::string::npos ? "1" : detail::strip(term.substr(colon + 1));
            put(t, coeff, line);
        }
    };

    LoadedObject obj;
    obj.name = name;
    if (fusion_mode) {
        std::vector<std::int64_t> table(static_cast<size_t>(n) * n * n, 0);
        for (int k = 0; k < n; ++k) {
            table[(static_cast<size_t>(0) * n + k) * n + k] = 1;
            table[(static_cast<size_t>(k) * n + 0) * n + k] = 1;
        }
        for (const auto& [ij, rhs] : products) {
            auto [i, j] = ij;
            for (int k = 0; k < n; ++k) table[(static_cast<size_t>(i) * n + j) * n + k] = 0;
            parse_terms(rhs.first, rhs.second, [&](int t, const std::string& coeff, int line) {
                try {
                    size_t used = 0;
                    long long v = std::stoll(coeff, &used);
                    if (used != coeff.size()) throw std::invalid_argument("trailing");
                    table[(static_cast<size_t>(i) * n + j) * n + t] = v;
                } catch (...) {
                    throw parse_error("fusion coefficient must be an integer, got '" + coeff + "'",
                                      line, 1);
                }
            });
        }
        obj.value = validate_fusion_ring(elements, inv, std::move(table));
    } else {
        std::vector<QuadScalar> table(static_cast<size_t>(n) * n * n, QuadScalar(0));
        for (int k = 0; k < n; ++k) {
            table[(static_cast<size_t>(0) * n + k) * n + k] = QuadScalar(1);
            table[(static_cast<size_t>(k) * n + 0) * n + k] = QuadScalar(1);
        }
        for (const auto& [ij, rhs] : products) {
            auto [i, j] = ij;
            for (int k = 0; k < n; ++k)
                table[(static_cast<size_t>(i) * n + j) * n + k] = QuadScalar(0);
            parse_terms(rhs.first, rhs.second, [&](int t, const std::string& coeff, int line) {
                try {
                    table[(static_cast<size_t>(i) * n + j) * n + t] = parse_scalar(coeff, field);
                } catch (const parse_error& pe) {
                    throw parse_error(pe.message() + " in scalar '" + coeff + "'", line, pe.col());
                }
            });
        }
        obj.value = validate_hypergroup(elements, inv, std::move(table));
    }
    return obj;
}

inline LoadedObject load_object_from_string(const std::string& text) {
    std::istringstream in(text);
    return load_object(in);
}

inline void save_object(std::ostream& out, const LoadedObject& obj) {
    auto write_common = [&](const std::vector<std::string>& labels, const std::vector<int>& inv) {
        if (!obj.name.empty()) out << "name = " << obj.name << "\n";
        out << "elements = ";
        for (size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << labels[i];
        out << "\n";
        out << "involution = ";
        for (size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << labels[inv[i]];
        out << "\n";
    };
    if (obj.is_fusion()) {
        const FusionRing& f = obj.fusion();
        out << "[fusion]\n";
        write_common(f.labels(), f.involution());
        for (int i = 1; i < f.size(); ++i)
            for (int j = 1; j < f.size(); ++j) {
                out << f.label(i) << "*" << f.label(j) << " =";
                bool first = true;
                for (int k = 0; k < f.size(); ++k) {
                    std::int64_t v = f.n(i, j, k);
                    if (v == 0) continue;
                    out << (first ? " " : ", ") << f.label(k);
                    if (v != 1) out << ":" << v;
                    first = false;
                }
                out << "\n";
            }
    } else {
        const Hypergroup& k = obj.hypergroup();
        out << "[hypergroup]\n";
        if (k.field_radicand() != 0) out << "field = " << k.field_radicand() << "\n";
        write_common(k.labels(), k.involution());
        for (int i = 1; i < k.size(); ++i)
            for (int j = 1; j < k.size(); ++j) {
                out << k.label(i) << "*" << k.label(j) << " =";
                bool first = true;
                for (int t = 0; t < k.size(); ++t) {
                    const QuadScalar& v = k.c(i, j, t);
                    if (v.is_zero()) continue;
                    out << (first ? " " : ", ") << k.label(t);
                    if (!v.is_one()) out << ":" << v.str();
                    first = false;
                }
                out << "\n";
            }
    }
}

inline std::string save_object_to_string(const LoadedObject& obj) {
    std::ostringstream out;
    save_object(out, obj);
    return out.str();
}

} // namespace hyperfuse
