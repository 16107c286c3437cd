#pragma once

// Machine-readable analysis reports: an ordered list of titled sections
// (key-value, table, or verdict). The JSON rendering round-trips; the
// human rendering is lossy but section-complete. Scalar values carry both
// the authoritative exact literal and a 12-digit decimal approximation.

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperfuse/scalar.hpp"

namespace hyperfuse {

inline double approx12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

struct ReportValue {
    std::string text;
    bool is_scalar = false;
    double approx = 0;

    static ReportValue plain(std::string s) { return {std::move(s), false, 0}; }
    static ReportValue of(const QuadScalar& q) { return {q.str(), true, approx12(q.to_double())}; }
    static ReportValue of(const Scalar& s) { return {s.str(), true, approx12(s.to_double())}; }
    static ReportValue of(const Rational& r) { return of(QuadScalar(r)); }

    std::string render() const {
        if (!is_scalar) return text;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", approx);
        // purely rational integers need no approximation suffix
        if (text.find('/') == std::string::npos && text.find('(') == std::string::npos) return text;
        return text + " (~" + buf + ")";
    }

    friend bool operator==(const ReportValue& a, const ReportValue& b) {
        return a.text == b.text && a.is_scalar == b.is_scalar && a.approx == b.approx;
    }
};

struct ReportSection {
    enum class Kind { key_value, table, verdict };
    std::string title;
    Kind kind = Kind::key_value;
    std::vector<std::pair<std::string, ReportValue>> kv;
    std::vector<std::string> headers;
    std::vector<std::vector<ReportValue>> rows;
    bool verdict_pass = false;
    std::string verdict_text;

    static ReportSection key_values(std::string title) {
        ReportSection s;
        s.title = std::move(title);
        s.kind = Kind::key_value;
        return s;
    }
    static ReportSection table(std::string title, std::vector<std::string> headers) {
        ReportSection s;
        s.title = std::move(title);
        s.kind = Kind::table;
        s.headers = std::move(headers);
        return s;
    }
    static ReportSection verdict(std::string title, bool pass, std::string text) {
        ReportSection s;
        s.title = std::move(title);
        s.kind = Kind::verdict;
        s.verdict_pass = pass;
        s.verdict_text = std::move(text);
        return s;
    }

    void add(std::string key, ReportValue v) { kv.emplace_back(std::move(key), std::move(v)); }
    void add(std::string key, std::string v) {
        kv.emplace_back(std::move(key), ReportValue::plain(std::move(v)));
    }
    void add_row(std::vector<ReportValue> row) { rows.push_back(std::move(row)); }

    friend bool operator==(const ReportSection& a, const ReportSection& b) {
        return a.title == b.title && a.kind == b.kind && a.kv == b.kv && a.headers == b.headers &&
               a.rows == b.rows && a.verdict_pass == b.verdict_pass &&
               a.verdict_text == b.verdict_text;
    }
};

struct AnalysisReport {
    enum class Status { ok, invalid_input, undecidable, internal_error };

    std::string subject;
    Status status = Status::ok;
    std::vector<ReportSection> sections;

    static const char* status_name(Status s) {
        switch (s) {
            case Status::ok: return "ok";
            case Status::invalid_input: return "invalid_input";
            case Status::undecidable: return "undecidable";
            case Status::internal_error: return "internal_error";
        }
        return "?";
    }
    static Status status_from(const std::string& s) {
        if (s == "ok") return Status::ok;
        if (s == "invalid_input") return Status::invalid_input;
        if (s == "undecidable") return Status::undecidable;
        if (s == "internal_error") return Status::internal_error;
        throw error("unknown exit status '" + s + "'");
    }

    int exit_code() const {
        switch (status) {
            case Status::ok: return 0;
            case Status::invalid_input: return 2;
            case Status::undecidable: return 3;
            case Status::internal_error: return 4;
        }
        return 4;
    }

    ReportSection& section(ReportSection s) {
        sections.push_back(std::move(s));
        return sections.back();
    }

    friend bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
        return a.subject == b.subject && a.status == b.status && a.sections == b.sections;
    }
};

// --- JSON -------------------------------------------------------------

inline nlohmann::json to_json(const ReportValue& v) {
    if (!v.is_scalar) return v.text;
    return nlohmann::json{{"exact", v.text}, {"approx", v.approx}};
}

inline ReportValue report_value_from_json(const nlohmann::json& j) {
    if (j.is_string()) return ReportValue::plain(j.get<std::string>());
    ReportValue v;
    v.is_scalar = true;
    v.text = j.at("exact").get<std::string>();
    v.approx = j.at("approx").get<double>();
    return v;
}

inline nlohmann::json to_json(const AnalysisReport& rep) {
    nlohmann::json out;
    out["subject"] = rep.subject;
    out["exit_status"] = AnalysisReport::status_name(rep.status);
    out["sections"] = nlohmann::json::array();
    for (const auto& s : rep.sections) {
        nlohmann::json js;
        js["title"] = s.title;
        switch (s.kind) {
            case ReportSection::Kind::key_value: {
                js["kind"] = "key_value";
                js["entries"] = nlohmann::json::array();
                for (const auto& [k, v] : s.kv)
                    js["entries"].push_back({{"key", k}, {"value", to_json(v)}});
                break;
            }
            case ReportSection::Kind::table: {
                js["kind"] = "table";
                js["headers"] = s.headers;
                js["rows"] = nlohmann::json::array();
                for (const auto& row : s.rows) {
                    nlohmann::json jr = nlohmann::json::array();
                    for (const auto& v : row) jr.push_back(to_json(v));
                    js["rows"].push_back(std::move(jr));
                }
                break;
            }
            case ReportSection::Kind::verdict: {
                js["kind"] = "verdict";
                js["pass"] = s.verdict_pass;
                js["text"] = s.verdict_text;
                break;
            }
        }
        out["sections"].push_back(std::move(js));
    }
    return out;
}

inline AnalysisReport report_from_json(const nlohmann::json& j) {
    AnalysisReport rep;
    rep.subject = j.at("subject").get<std::string>();
    rep.status = AnalysisReport::status_from(j.at("exit_status").get<std::string>());
    for (const auto& js : j.at("sections")) {
        ReportSection s;
        s.title = js.at("title").get<std::string>();
        std::string kind = js.at("kind").get<std::string>();
        if (kind == "key_value") {
            s.kind = ReportSection::Kind::key_value;
            for (const auto& e : js.at("entries"))
                s.kv.emplace_back(e.at("key").get<std::string>(),
                                  report_value_from_json(e.at("value")));
        } else if (kind == "table") {
            s.kind = ReportSection::Kind::table;
            s.headers = js.at("headers").get<std::vector<std::string>>();
            for (const auto& jr : js.at("rows")) {
                std::vector<ReportValue> row;
                for (const auto& v : jr) row.push_back(report_value_from_json(v));
                s.rows.push_back(std::move(row));
            }
        } else if (kind == "verdict") {
            s.kind = ReportSection::Kind::verdict;
            s.verdict_pass = js.at("pass").get<bool>();
            s.verdict_text = js.at("text").get<std::string>();
        } else {
            throw error("unknown section kind '" + kind + "'");
        }
        rep.sections.push_back(std::move(s));
    }
    return rep;
}

// --- human rendering ---------------------------------------------------

inline void render_text(std::ostream& out, const AnalysisReport& rep) {
    out << "== " << rep.subject << " ==\n";
    for (const auto& s : rep.sections) {
        out << "\n" << s.title << "\n";
        switch (s.kind) {
            case ReportSection::Kind::key_value:
                for (const auto& [k, v] : s.kv) out << "  " << k << ": " << v.render() << "\n";
                break;
            case ReportSection::Kind::table: {
                out << " ";
                for (const auto& h : s.headers) out << " " << h << " |";
                out << "\n";
                for (const auto& row : s.rows) {
                    out << " ";
                    for (const auto& v : row) out << " " << v.render() << " |";
                    out << "\n";
                }
                break;
            }
            case ReportSection::Kind::verdict:
                out << "  " << (s.verdict_pass ? "PASS" : "FAIL") << ": " << s.verdict_text << "\n";
                break;
        }
    }
    out << "\nstatus: " << AnalysisReport::status_name(rep.status) << "\n";
}

} // namespace hyperfuse
