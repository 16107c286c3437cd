// hyperfuse — exact hypergroup and fusion ring calculator.
//
// File-mediated pipelines: commands read one object file (or "-" for
// stdin) and print an analysis report; commands that produce a new object
// write it with --out (or "-" for stdout). Exit codes: 0 ok, 2 invalid
// input, 3 undecidable at the precision floor, 4 internal consistency
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperfuse/hyperfuse.hpp"

namespace hf = hyperfuse;
using hf::AnalysisReport;
using hf::ReportSection;
using hf::ReportValue;

namespace {

// set when an object file has been streamed to stdout; the report is then
// suppressed so pipelines receive clean file text
bool object_on_stdout = false;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw hf::error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        object_on_stdout = true;
        return;
    }
    std::ofstream out(path);
    if (!out) throw hf::error("cannot write '" + path + "'");
    out << text;
}

hf::LoadedObject load_path(const std::string& path) {
    return hf::load_object_from_string(read_input(path));
}

// Most analyses run on hypergroups; fusion files are converted through
// their Perron-Frobenius dimensions (exact mode required).
hf::Hypergroup as_hypergroup(const hf::LoadedObject& obj, AnalysisReport& rep) {
    if (!obj.is_fusion()) return obj.hypergroup();
    auto& s = rep.section(ReportSection::key_values("conversion"));
    s.add("note", "fusion ring converted to hypergroup via Perron-Frobenius dimensions");
    return hf::to_hypergroup(obj.fusion());
}

std::vector<int> parse_subset(const hf::Hypergroup& k, const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    std::istringstream ss(csv);
    while (std::getline(ss, cur, ',')) {
        size_t a = cur.find_first_not_of(" \t");
        size_t b = cur.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        std::string lbl = cur.substr(a, b - a + 1);
        int idx = k.index_of(lbl);
        if (idx < 0) throw hf::error("unknown element '" + lbl + "'");
        out.push_back(idx);
    }
    return out;
}

// "c1" or "c0:1/2,c1:(1+0*sqrt(2))/2"
hf::AlgebraElement parse_probe(const hf::Hypergroup& k, const std::string& text) {
    hf::AlgebraElement e = hf::zero_element(k);
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        size_t a = cur.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = cur.find_last_not_of(" \t");
        std::string term = cur.substr(a, b - a + 1);
        auto colon = term.find(':');
        std::string lbl = colon == std::string::npos ? term : term.substr(0, colon);
        int idx = k.index_of(lbl);
        if (idx < 0) throw hf::error("unknown element '" + lbl + "' in probe");
        hf::QuadScalar coeff(1);
        if (colon != std::string::npos)
            coeff = hf::parse_scalar(term.substr(colon + 1),
                                     k.field_radicand() ? std::optional<std::int64_t>(k.field_radicand())
                                                        : std::nullopt);
        e.coeffs[idx] += coeff;
    }
    return e;
}

void add_weight_section(AnalysisReport& rep, const hf::Hypergroup& k) {
    hf::WeightData wd = hf::weights(k);
    auto& tab = rep.section(ReportSection::table("weights", {"element", "weight"}));
    for (int i = 0; i < k.size(); ++i)
        tab.add_row({ReportValue::plain(k.label(i)), ReportValue::of(wd.w[i])});
    auto& s = rep.section(ReportSection::key_values("totals"));
    s.add("D(K)", ReportValue::of(wd.total));
}

std::string subset_labels(const hf::Hypergroup& k, const std::vector<int>& idx) {
    std::string s;
    for (size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + k.label(idx[i]);
    return s;
}

// ----------------------------------------------------------------------
// subcommand bodies
// ----------------------------------------------------------------------

AnalysisReport cmd_verify(const std::string& path) {
    AnalysisReport rep;
    rep.subject = "verify " + path;
    try {
        hf::LoadedObject obj = load_path(path);
        auto& s = rep.section(ReportSection::key_values("object"));
        s.add("kind", obj.is_fusion() ? "fusion ring" : "hypergroup");
        s.add("elements", std::to_string(obj.is_fusion() ? obj.fusion().size()
                                                         : obj.hypergroup().size()));
        rep.section(ReportSection::verdict("validation", true, "all axioms hold"));
    } catch (const hf::validation_error& e) {
        auto& tab = rep.section(ReportSection::table("violations", {"axiom", "indices", "detail"}));
        for (const auto& v : e.report().violations) {
            std::string idx;
            for (size_t t = 0; t < v.idx.size(); ++t)
                idx += (t ? "," : "") + std::to_string(v.idx[t]);
            tab.add_row({ReportValue::plain(hf::Violation::kind_name(v.kind)),
                         ReportValue::plain(idx), ReportValue::plain(v.detail)});
        }
        rep.section(ReportSection::verdict("validation", false, e.what()));
        rep.status = AnalysisReport::Status::invalid_input;
    }
    return rep;
}

AnalysisReport cmd_info(const std::string& path) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = obj.name.empty() ? "info " + path : "info " + obj.name;
    if (obj.is_fusion()) {
        const hf::FusionRing& f = obj.fusion();
        hf::DimensionVector dv = hf::fp_dimension(f);
        auto& tab = rep.section(ReportSection::table("dimensions", {"element", "d"}));
        for (int i = 0; i < f.size(); ++i)
            tab.add_row({ReportValue::plain(f.label(i)), ReportValue::of(dv.dims[i])});
        auto& s = rep.section(ReportSection::key_values("totals"));
        s.add("D(F)", ReportValue::of(dv.global));
        s.add("mode", dv.exact ? "exact" : "certified interval");
        if (dv.exact && dv.radicand)
            s.add("field", "Q(sqrt(" + std::to_string(dv.radicand) + "))");
        return rep;
    }
    const hf::Hypergroup& k = obj.hypergroup();
    add_weight_section(rep, k);
    hf::AlgebraElement e = hf::haar_element(k);
    auto& hs = rep.section(ReportSection::table("haar element", {"element", "coefficient"}));
    for (int i = 0; i < k.size(); ++i)
        hs.add_row({ReportValue::plain(k.label(i)), ReportValue::of(e.coeffs[i])});
    auto& fl = rep.section(ReportSection::key_values("flags"));
    fl.add("group", hf::is_group(k) ? "yes" : "no");
    fl.add("commutative", hf::is_commutative(k) ? "yes" : "no");
    if (k.field_radicand()) fl.add("field", "Q(sqrt(" + std::to_string(k.field_radicand()) + "))");
    fl.add("frobenius identities", hf::frobenius_check(k).ok ? "hold" : "violated");
    return rep;
}

struct CatalogArgs {
    std::string family;
    std::string group = "Z2";
    int m = 1;
    int level = 1;
    std::string d = "2";
    bool as_hypergroup = false;
    std::string out = "-";
};

AnalysisReport cmd_catalog_build(const CatalogArgs& a) {
    AnalysisReport rep;
    rep.subject = "catalog build " + a.family;
    hf::LoadedObject obj;
    if (a.family == "group") {
        obj.value = hf::group_ring(hf::GroupSpec::parse(a.group));
        obj.name = "group " + a.group;
    } else if (a.family == "tambara_yamagami") {
        obj.value = hf::tambara_yamagami(hf::GroupSpec::parse(a.group));
        obj.name = "tambara_yamagami " + a.group;
    } else if (a.family == "near_group") {
        obj.value = hf::near_group(hf::GroupSpec::parse(a.group), a.m);
        obj.name = "near_group " + a.group + "+" + std::to_string(a.m);
    } else if (a.family == "haagerup_izumi") {
        obj.value = hf::haagerup_izumi(hf::GroupSpec::parse(a.group));
        obj.name = "haagerup_izumi " + a.group;
    } else if (a.family == "su2_level") {
        obj.value = hf::su2_level(a.level);
        obj.name = "su2 level " + std::to_string(a.level);
    } else if (a.family == "fibonacci") {
        obj.value = hf::fibonacci();
        obj.name = "fibonacci";
    } else if (a.family == "two_element") {
        obj.value = hf::two_element(hf::parse_scalar(a.d));
        obj.name = "two_element " + a.d;
    } else {
        throw hf::error("unknown catalog family '" + a.family + "' (see 'catalog list')");
    }
    if (a.as_hypergroup && !obj.is_fusion()) {
        // two_element already is one
    } else if (a.as_hypergroup) {
        obj.value = hf::to_hypergroup(obj.fusion());
    }
    write_output(a.out, hf::save_object_to_string(obj));
    auto& s = rep.section(ReportSection::key_values("built"));
    s.add("object", obj.name);
    s.add("kind", obj.is_fusion() ? "fusion ring" : "hypergroup");
    s.add("written to", a.out);
    return rep;
}

AnalysisReport cmd_subs(const std::string& path, int bound) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "subs " + path;
    hf::Hypergroup k = as_hypergroup(obj, rep);
    auto subs = hf::find_subhypergroups(k, bound);
    auto& tab = rep.section(ReportSection::table("subhypergroups", {"size", "members", "D(L)"}));
    for (const auto& l : subs)
        tab.add_row({ReportValue::plain(std::to_string(l.size())),
                     ReportValue::plain(l.label_list()), ReportValue::of(hf::subgroup_weight(l))});
    return rep;
}

AnalysisReport cmd_quotient(const std::string& path, const std::string& by,
                            const std::string& out) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "quotient " + path + " // {" + by + "}";
    hf::Hypergroup k = as_hypergroup(obj, rep);
    hf::Subhypergroup l = hf::make_subhypergroup(k, parse_subset(k, by));
    hf::QuotientResult q = hf::quotient_hypergroup(k, l);
    auto& cls = rep.section(ReportSection::table("double cosets", {"class", "members"}));
    for (int t = 0; t < q.space.count(); ++t)
        cls.add_row({ReportValue::plain(q.quotient.label(t)),
                     ReportValue::plain(subset_labels(k, q.space.classes[t]))});
    add_weight_section(rep, q.quotient);
    auto& s = rep.section(ReportSection::key_values("factorization"));
    s.add("D(K)", ReportValue::of(hf::weights(k).total));
    s.add("D(L)", ReportValue::of(hf::subgroup_weight(l)));
    s.add("D(K//L)", ReportValue::of(hf::weights(q.quotient).total));
    if (!out.empty()) {
        hf::LoadedObject qo;
        qo.name = obj.name.empty() ? "quotient" : obj.name + " // {" + by + "}";
        qo.value = q.quotient;
        write_output(out, hf::save_object_to_string(qo));
    }
    return rep;
}

AnalysisReport cmd_cosets(const std::string& path, const std::string& left,
                          const std::string& right) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "cosets " + path;
    hf::Hypergroup k = as_hypergroup(obj, rep);
    hf::Subhypergroup l = hf::make_subhypergroup(k, parse_subset(k, left));
    hf::Subhypergroup m = hf::make_subhypergroup(k, parse_subset(k, right));
    hf::DoubleCosetSpace dcs = hf::double_cosets(k, l, m);
    auto& tab =
        rep.section(ReportSection::table("double cosets", {"representative", "members", "e_L c e_M"}));
    for (int t = 0; t < dcs.count(); ++t) {
        std::string vec;
        for (int i = 0; i < k.size(); ++i) {
            if (dcs.sandwiches[t].coeffs[i].is_zero()) continue;
            if (!vec.empty()) vec += " + ";
            vec += dcs.sandwiches[t].coeffs[i].str() + "*" + k.label(i);
        }
        tab.add_row({ReportValue::plain(k.label(dcs.representatives[t])),
                     ReportValue::plain(subset_labels(k, dcs.classes[t])),
                     ReportValue::plain(vec)});
    }
    return rep;
}

AnalysisReport cmd_grading(const std::string& path) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "grading " + path;
    hf::Hypergroup k = as_hypergroup(obj, rep);
    hf::GradingData gd = hf::universal_grading(k);
    auto& s = rep.section(ReportSection::key_values("adjoint subhypergroup"));
    s.add("K_ad", subset_labels(k, gd.adjoint.members));
    s.add("universal grading group order", std::to_string(gd.universal_group.size()));
    auto& tab = rep.section(ReportSection::table("grading components", {"degree", "elements"}));
    for (int t = 0; t < gd.universal_group.size(); ++t)
        tab.add_row({ReportValue::plain(gd.universal_group.label(t)),
                     ReportValue::plain(subset_labels(k, gd.components[t]))});
    return rep;
}

AnalysisReport cmd_chain(const std::string& path) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "chain " + path;
    hf::Hypergroup k = as_hypergroup(obj, rep);
    hf::DerivedChain dc = hf::derived_chain(k);
    auto& tab = rep.section(ReportSection::table("derived chain", {"step", "members", "D"}));
    for (size_t t = 0; t < dc.chain.size(); ++t)
        tab.add_row({ReportValue::plain("K_" + std::to_string(t)),
                     ReportValue::plain(subset_labels(k, dc.members[t])),
                     ReportValue::of(hf::weights(dc.chain[t]).total)});
    auto& gs = rep.section(ReportSection::table("grading groups", {"step", "|G|"}));
    for (size_t t = 0; t < dc.groups.size(); ++t)
        gs.add_row({ReportValue::plain("G_" + std::to_string(t + 1)),
                    ReportValue::plain(std::to_string(dc.groups[t].size()))});
    rep.section(ReportSection::verdict(
        "nilpotency", dc.nilpotent,
        dc.nilpotent ? "chain terminates at the trivial hypergroup"
                     : "chain is stationary at a nontrivial hypergroup"));
    return rep;
}

AnalysisReport cmd_unitring(const std::string& path) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "unitring " + path;
    hf::Hypergroup k = as_hypergroup(obj, rep);
    hf::Subhypergroup mx = hf::maximal_subgroup(k);
    auto& s = rep.section(ReportSection::key_values("maximal subgroup"));
    s.add("K^x", subset_labels(k, mx.members));
    s.add("order", std::to_string(mx.size()));
    hf::QuotientResult q = hf::quotient_hypergroup(k, mx);
    s.add("D(K // K^x)", ReportValue::of(hf::weights(q.quotient).total));
    s.add("quotient elements", std::to_string(q.quotient.size()));
    return rep;
}

AnalysisReport cmd_chars(const std::string& path) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "chars " + path;
    hf::Hypergroup k = as_hypergroup(obj, rep);
    hf::CharacterTable ct = hf::character_table(k);
    std::vector<std::string> headers{"character"};
    for (int i = 0; i < k.size(); ++i) headers.push_back(k.label(i));
    auto& tab = rep.section(ReportSection::table("character table", headers));
    for (size_t m = 0; m < ct.rows.size(); ++m) {
        std::vector<ReportValue> row{ReportValue::plain("chi" + std::to_string(m))};
        for (int i = 0; i < k.size(); ++i) row.push_back(ReportValue::of(ct.rows[m][i]));
        tab.add_row(std::move(row));
    }
    auto& s = rep.section(ReportSection::key_values("mode"));
    s.add("values", ct.exact ? "exact" : "certified intervals");
    return rep;
}

AnalysisReport cmd_dual(const std::string& path, const std::string& out) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "dual " + path;
    hf::Hypergroup k = as_hypergroup(obj, rep);
    hf::CharacterTable ct = hf::character_table(k);
    hf::DualResult dr = hf::dual_hypergroup(ct);
    if (!dr.is_hypergroup) {
        rep.section(ReportSection::verdict(
            "dual", false,
            "not a hypergroup: constant C[chi" + std::to_string(dr.m) + "][chi" +
                std::to_string(dr.m2) + "][chi" + std::to_string(dr.m3) + "] = " +
                dr.offending.str() + " is negative"));
        return rep;
    }
    rep.section(ReportSection::verdict("dual", true, "character products form a hypergroup"));
    add_weight_section(rep, dr.dual);
    auto& s = rep.section(ReportSection::key_values("identification"));
    s.add("self-dual", dr.dual.same_structure(k) ? "yes (identical structure constants)" : "no");
    if (!out.empty()) {
        hf::LoadedObject d;
        d.name = (obj.name.empty() ? path : obj.name) + " dual";
        d.value = dr.dual;
        write_output(out, hf::save_object_to_string(d));
    }
    return rep;
}

AnalysisReport cmd_walk(const std::string& path, const std::string& probe, long steps,
                        std::uint64_t seed, const std::string& start, const std::string& csv) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "walk " + path;
    hf::Hypergroup k = as_hypergroup(obj, rep);
    hf::AlgebraElement p = parse_probe(k, probe);
    hf::MarkovChain mc = hf::transition_matrix(k, p);
    int start_idx = 0;
    if (!start.empty()) {
        start_idx = k.index_of(start);
        if (start_idx < 0) throw hf::error("unknown start element '" + start + "'");
    }
    hf::WalkResult w = hf::simulate_walk(mc, start_idx, steps, seed);
    if (!csv.empty()) {
        std::ostringstream ss;
        ss << "step,state\n";
        for (size_t t = 0; t < w.trajectory.size(); ++t)
            ss << t << "," << k.label(w.trajectory[t]) << "\n";
        write_output(csv, ss.str());
    }
    hf::WeightData wd = hf::weights(k);
    auto& tab = rep.section(ReportSection::table("occupation", {"element", "empirical", "haar"}));
    for (int i = 0; i < k.size(); ++i)
        tab.add_row({ReportValue::plain(k.label(i)), ReportValue::of(hf::QuadScalar(w.empirical[i])),
                     ReportValue::of(wd.w[i] / wd.total)});
    auto& s = rep.section(ReportSection::key_values("summary"));
    s.add("steps", std::to_string(steps));
    s.add("seed", std::to_string(seed));
    s.add("tv distance to haar", ReportValue::of(w.tv_to_haar));
    return rep;
}

AnalysisReport cmd_convert(const std::string& path, const std::string& out) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "convert " + path;
    if (!obj.is_fusion()) throw hf::error("convert expects a fusion ring file");
    hf::Hypergroup k = hf::to_hypergroup(obj.fusion());
    hf::LoadedObject ho;
    ho.name = obj.name;
    ho.value = k;
    write_output(out, hf::save_object_to_string(ho));
    add_weight_section(rep, k);
    return rep;
}

AnalysisReport cmd_ringtest(const std::string& path) {
    AnalysisReport rep;
    hf::LoadedObject obj = load_path(path);
    rep.subject = "ringtest " + path;
    hf::Hypergroup k = as_hypergroup(obj, rep);
    hf::RingTestResult rt = hf::fusion_ring_test(k);
    if (rt.passes) {
        rep.section(ReportSection::verdict("fusion ring test", true,
                                           "rescaled constants are nonnegative integers"));
        auto& tab = rep.section(ReportSection::table("recovered fusion rules", {"product", "rules"}));
        for (int i = 1; i < k.size(); ++i)
            for (int j = 1; j < k.size(); ++j) {
                std::string rhs;
                for (int t = 0; t < k.size(); ++t) {
                    std::int64_t v = rt.n_table[(static_cast<size_t>(i) * k.size() + j) * k.size() + t];
                    if (!v) continue;
                    if (!rhs.empty()) rhs += " + ";
                    rhs += (v == 1 ? "" : std::to_string(v) + "*") + k.label(t);
                }
                tab.add_row({ReportValue::plain(k.label(i) + "*" + k.label(j)),
                             ReportValue::plain(rhs)});
            }
    } else {
        rep.section(ReportSection::verdict(
            "fusion ring test", false,
            "fails: coefficient " + rt.witness + " not integral at C[" + k.label(rt.i) + "][" +
                k.label(rt.j) + "][" + k.label(rt.k) + "]"));
    }
    return rep;
}

AnalysisReport cmd_index(const std::string& dk, const std::string& dh, const std::string& mu) {
    AnalysisReport rep;
    rep.subject = "index";
    hf::IndexResult r =
        hf::index_formulas(hf::parse_scalar(dk), hf::parse_scalar(dh), hf::parse_scalar(mu));
    auto& s = rep.section(ReportSection::key_values("indices"));
    s.add("subnet index D(K)/D(H)", ReportValue::of(r.subnet_index));
    s.add("mu index mu*D(K)^2", ReportValue::of(r.mu_index));
    return rep;
}

void apply_env_floor() {
    const char* env = std::getenv("HYPERFUSE_PRECISION_FLOOR");
    if (!env) return;
    std::string s(env);
    try {
        auto epos = s.find_first_of("eE");
        if (epos != std::string::npos) {
            // scientific form like 1e-80
            long mant = std::stol(s.substr(0, epos));
            long exp = std::stol(s.substr(epos + 1));
            hf::Rational f(mant);
            hf::BigInt p = boost::multiprecision::pow(hf::BigInt(10), static_cast<unsigned>(std::abs(exp)));
            f = exp < 0 ? f / hf::Rational(p) : f * hf::Rational(p);
            hf::set_precision_floor(f);
        } else if (auto slash = s.find('/'); slash != std::string::npos) {
            hf::set_precision_floor(
                hf::Rational(hf::BigInt(s.substr(0, slash)), hf::BigInt(s.substr(slash + 1))));
        } else {
            hf::set_precision_floor(hf::Rational(hf::BigInt(s)));
        }
    } catch (...) {
        throw hf::error("cannot parse HYPERFUSE_PRECISION_FLOOR='" + s + "'");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperfuse: exact finite hypergroup and fusion ring calculator"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit the report as JSON");

    std::string in_path = "-", out_path, by, left, right, probe = "c1", start, csv;
    long steps = 1000;
    std::uint64_t seed = 1;
    int bound = 20;
    std::string dk = "1", dh = "1", mu = "1";
    CatalogArgs cat;

    auto* verify = app.add_subcommand("verify", "validate an object file");
    verify->add_option("file", in_path);
    auto* info = app.add_subcommand("info", "weights, Haar element, flags");
    info->add_option("file", in_path);

    auto* catalog = app.add_subcommand("catalog", "built-in families");
    auto* cat_list = catalog->add_subcommand("list", "list families");
    auto* cat_build = catalog->add_subcommand("build", "construct a family member");
    cat_build->add_option("family", cat.family)->required();
    cat_build->add_option("--group", cat.group, "group spec, e.g. Z2, Z3, Z2xZ2, S3");
    cat_build->add_option("--m", cat.m, "near-group multiplicity");
    cat_build->add_option("--level", cat.level, "su2 level");
    cat_build->add_option("--d", cat.d, "two_element parameter (exact scalar literal)");
    cat_build->add_flag("--as-hypergroup", cat.as_hypergroup,
                        "convert fusion rings through their PF dimensions");
    cat_build->add_option("--out", cat.out, "output path or - for stdout");

    auto* subs = app.add_subcommand("subs", "enumerate subhypergroups");
    subs->add_option("file", in_path);
    subs->add_option("--bound", bound, "max non-identity elements for enumeration");
    auto* quotient = app.add_subcommand("quotient", "double-coset quotient K//L");
    quotient->add_option("file", in_path);
    quotient->add_option("--by", by, "comma-separated member labels of L")->required();
    quotient->add_option("--out", out_path, "write the quotient hypergroup here");
    auto* cosets = app.add_subcommand("cosets", "double cosets L\\K/M");
    cosets->add_option("file", in_path);
    cosets->add_option("--left", left)->required();
    cosets->add_option("--right", right)->required();
    auto* grading = app.add_subcommand("grading", "adjoint subhypergroup and universal grading");
    grading->add_option("file", in_path);
    auto* chain = app.add_subcommand("chain", "iterated adjoint chain and nilpotency");
    chain->add_option("file", in_path);
    auto* unitring = app.add_subcommand("unitring", "maximal subgroup and its quotient");
    unitring->add_option("file", in_path);
    auto* chars = app.add_subcommand("chars", "character table (commutative only)");
    chars->add_option("file", in_path);
    auto* dual = app.add_subcommand("dual", "dual hypergroup from characters");
    dual->add_option("file", in_path);
    dual->add_option("--out", out_path);
    auto* walk = app.add_subcommand("walk", "simulate the Markov chain of a probe");
    walk->add_option("file", in_path);
    walk->add_option("--probe", probe, "element label or convex combination");
    walk->add_option("--steps", steps)->required();
    walk->add_option("--seed", seed)->required();
    walk->add_option("--start", start, "start element (default identity)");
    walk->add_option("--csv", csv, "write step,state trajectory CSV here");
    auto* convert = app.add_subcommand("convert", "fusion ring -> hypergroup");
    convert->add_option("file", in_path);
    convert->add_option("--out", out_path)->required();
    auto* ringtest = app.add_subcommand("ringtest", "does the hypergroup come from a fusion ring?");
    ringtest->add_option("file", in_path);
    auto* index = app.add_subcommand("index", "inclusion index and mu-index arithmetic");
    index->add_option("--dk", dk, "D(K), exact scalar literal")->required();
    index->add_option("--dh", dh, "D(H), exact scalar literal");
    index->add_option("--mu", mu, "mu(B), exact scalar literal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    AnalysisReport rep;
    try {
        apply_env_floor();
        if (*verify) rep = cmd_verify(in_path);
        else if (*info) rep = cmd_info(in_path);
        else if (*cat_list) {
            rep.subject = "catalog";
            auto& tab = rep.section(ReportSection::table("families", {"name", "parameters"}));
            tab.add_row({ReportValue::plain("group"), ReportValue::plain("--group <spec>")});
            tab.add_row({ReportValue::plain("tambara_yamagami"), ReportValue::plain("--group <abelian>")});
            tab.add_row({ReportValue::plain("near_group"), ReportValue::plain("--group <abelian> --m <int>")});
            tab.add_row({ReportValue::plain("haagerup_izumi"), ReportValue::plain("--group <abelian>")});
            tab.add_row({ReportValue::plain("su2_level"), ReportValue::plain("--level <k>")});
            tab.add_row({ReportValue::plain("fibonacci"), ReportValue::plain("")});
            tab.add_row({ReportValue::plain("two_element"), ReportValue::plain("--d <scalar>")});
        } else if (*cat_build) rep = cmd_catalog_build(cat);
        else if (*subs) rep = cmd_subs(in_path, bound);
        else if (*quotient) rep = cmd_quotient(in_path, by, out_path);
        else if (*cosets) rep = cmd_cosets(in_path, left, right);
        else if (*grading) rep = cmd_grading(in_path);
        else if (*chain) rep = cmd_chain(in_path);
        else if (*unitring) rep = cmd_unitring(in_path);
        else if (*chars) rep = cmd_chars(in_path);
        else if (*dual) rep = cmd_dual(in_path, out_path);
        else if (*walk) rep = cmd_walk(in_path, probe, steps, seed, start, csv);
        else if (*convert) rep = cmd_convert(in_path, out_path);
        else if (*ringtest) rep = cmd_ringtest(in_path);
        else if (*index) rep = cmd_index(dk, dh, mu);
        else if (*catalog) {
            std::cerr << catalog->help();
            return 2;
        }
    } catch (const hf::internal_inconsistency& e) {
        rep.section(ReportSection::verdict("error", false, e.what()));
        rep.status = AnalysisReport::Status::internal_error;
    } catch (const hf::precision_floor_reached& e) {
        rep.section(ReportSection::verdict("error", false, e.what()));
        rep.status = AnalysisReport::Status::undecidable;
    } catch (const hf::unsupported_field& e) {
        rep.section(ReportSection::verdict("error", false, e.what()));
        rep.status = AnalysisReport::Status::undecidable;
    } catch (const hf::error& e) {
        rep.section(ReportSection::verdict("error", false, e.what()));
        rep.status = AnalysisReport::Status::invalid_input;
    } catch (const std::exception& e) {
        rep.section(ReportSection::verdict("error", false, e.what()));
        rep.status = AnalysisReport::Status::internal_error;
    }

    if (!object_on_stdout) {
        if (json) std::cout << hf::to_json(rep).dump(2) << "\n";
        else hf::render_text(std::cout, rep);
    }
    return rep.exit_code();
}
