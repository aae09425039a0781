#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "magicfib/braid.hpp"
#include "magicfib/contfrac.hpp"
#include "magicfib/errors.hpp"
#include "magicfib/garside.hpp"
#include "magicfib/horseshoe.hpp"
#include "magicfib/intpoly.hpp"
#include "magicfib/lamination.hpp"
#include "magicfib/laurent.hpp"
#include "magicfib/magic.hpp"

namespace mfib::cli {

Json Record::to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["notes"] = notes;
    return j;
}

Record Record::from_json(const Json& j) {
    Record r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

namespace {

enum class Format { Text, Json, Csv };

struct Settings {
    Format format = Format::Text;
    int digits = 6;
    std::string tol_text = "1e-12";
    std::size_t budget = 200000;
    int iters = 2000;

    mpq_class tol() const {
        const double t = std::stod(tol_text);
        if (!(t > 0) || !std::isfinite(t)) throw DomainError("--tol must be a positive number");
        return mpq_class(t);
    }
};

std::string decimal(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

// Half a unit in the last printed digit, or the computation tolerance if larger.
Json approx(double v, double tol, int digits) {
    double unit = 0.0;
    if (v != 0.0 && std::isfinite(v)) unit = 0.5 * std::pow(10.0, std::floor(std::log10(std::fabs(v))) - digits + 1);
    return Json{{"value", decimal(v, digits)}, {"tol", decimal(std::max(unit, tol), 2)}};
}

Json class_json(const magic::FiberClass& c) { return Json::array({c.x, c.y, c.z}); }

std::string scalar_text(const Json& v) {
    if (v.is_object() && v.contains("value")) return v["value"].get<std::string>();
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void render_rows_csv(const Json& rows, std::ostream& out) {
    if (rows.empty()) return;
    bool first = true;
    for (const auto& [key, _] : rows.front().items()) {
        out << (first ? "" : ",") << csv_field(key);
        first = false;
    }
    out << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& [_, v] : row.items()) {
            out << (first ? "" : ",") << csv_field(scalar_text(v));
            first = false;
        }
        out << '\n';
    }
}

void render(const Record& r, Format fmt, std::ostream& out) {
    if (fmt == Format::Json) {
        out << r.to_json().dump(2) << '\n';
        return;
    }
    const bool tabular = r.results.contains("rows") && r.results["rows"].is_array();
    if (fmt == Format::Csv || (tabular && r.command == "table")) {
        if (tabular) {
            render_rows_csv(r.results["rows"], out);
        } else {
            out << "key,value\n";
            for (const auto& [k, v] : r.results.items()) out << csv_field(k) << ',' << csv_field(scalar_text(v)) << '\n';
        }
        return;
    }
    for (const auto& [k, v] : r.results.items()) {
        if (k == "rows") {
            for (const auto& row : v) {
                std::string line;
                for (const auto& [rk, rv] : row.items()) line += (line.empty() ? "" : "  ") + rk + "=" + scalar_text(rv);
                out << line << '\n';
            }
        } else {
            out << k << ": " << scalar_text(v) << '\n';
        }
    }
    for (const auto& n : r.notes) out << "note: " << n << '\n';
}

magic::FiberClass pair_class(const std::string& text) {
    auto c = magic::parse_class(text);
    if (c.z != 0) throw DomainError("expected a class x,y (z = 0)");
    return c;
}

std::string braid_name(long m, long p) { return "T_{" + std::to_string(m) + "," + std::to_string(p) + "}"; }

Json table_row(long m, int digits) {
    const auto mm = cf::minimal_monodromy(m);
    std::string names;
    for (auto p : mm.ps) names += (names.empty() ? "" : " or ") + braid_name(m, p);
    const auto& c = mm.classes.front();
    const magic::FiberClass cls{c.x, c.y, 0};
    const double lambda = magic::dilatation(cls).get_d();
    Json row;
    row["m"] = m;
    row["braid"] = names;
    row["lambda"] = approx(lambda, 1e-12, digits);
    row["entropy"] = approx(std::log(lambda), 1e-12, digits);
    return row;
}

class Commands {
public:
    Commands(CLI::App& app, Settings& s) : app_(app), s_(s) {}

    void install();
    Record run_selected() const {
        if (!action_) throw CLI::CallForHelp();
        return action_();
    }

private:
    CLI::App* leaf(CLI::App& parent, const std::string& name, const std::string& help) {
        auto* sub = parent.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    }
    void on(CLI::App* sub, std::function<Record()> fn) {
        sub->callback([this, fn = std::move(fn)] { action_ = fn; });
    }

    CLI::App& app_;
    Settings& s_;
    std::function<Record()> action_;

    std::string cls_;
    long n_ = 0, m_ = 0, p_ = 0, k_ = 0, lo_ = 3, hi_ = 39, strand_ = 1;
    std::vector<long> seq_;
    std::string braid_, other_, orbits_;
};

void Commands::install() {
    auto* norm = leaf(app_, "norm", "Thurston norm of a class");
    norm->add_option("--class", cls_, "x,y,z")->required();
    on(norm, [this] {
        auto c = magic::parse_class(cls_);
        Record r{"norm", {{"class", cls_}}, {}, {}};
        r.results["in_cone"] = magic::in_open_cone(c);
        r.results["norm"] = magic::thurston_norm(c);
        return r;
    });

    auto* info = leaf(app_, "fiber-info", "boundary, genus and prong data of a fiber");
    info->add_option("--class", cls_, "x,y,z")->required();
    on(info, [this] {
        auto c = magic::parse_class(cls_);
        auto fi = magic::fiber_info(c);
        Record r{"fiber-info", {{"class", cls_}}, {}, {}};
        r.results["norm"] = fi.norm;
        r.results["boundary"] = fi.boundary;
        r.results["punctures"] = fi.punctures;
        r.results["genus"] = fi.genus;
        r.results["prongs"] = fi.prongs;
        return r;
    });

    auto* dil = leaf(app_, "dilatation", "largest root of the specialized polynomial");
    dil->add_option("--class", cls_, "x,y,z")->required();
    on(dil, [this] {
        auto c = magic::parse_class(cls_);
        const mpq_class tol = s_.tol();
        Record r{"dilatation", {{"class", cls_}, {"tol", s_.tol_text}}, {}, {}};
        r.results["polynomial"] = magic::teichmuller_specialization(c.primitive_part()).to_string();
        r.results["lambda"] = approx(magic::dilatation(c, tol).get_d(), tol.get_d(), s_.digits);
        if (!c.primitive()) r.notes.push_back("dilatation of the primitive part raised to the content");
        return r;
    });

    auto* ent = leaf(app_, "entropy", "entropy and normalized entropy");
    ent->add_option("--class", cls_, "x,y,z")->required();
    on(ent, [this] {
        auto c = magic::parse_class(cls_);
        const mpq_class tol = s_.tol();
        Record r{"entropy", {{"class", cls_}, {"tol", s_.tol_text}}, {}, {}};
        r.results["entropy"] = approx(magic::entropy(c, tol), tol.get_d(), s_.digits);
        r.results["normalized_entropy"] = approx(magic::normalized_entropy(c, tol), tol.get_d(), s_.digits);
        return r;
    });

    auto* g0 = leaf(app_, "genus0", "genus-0 family of a class");
    g0->add_option("--class", cls_, "x,y,z")->required();
    on(g0, [this] {
        auto c = magic::parse_class(cls_);
        Record r{"genus0", {{"class", cls_}}, {}, {}};
        r.results["kind"] = magic::genus0_classify(c).to_string();
        return r;
    });

    auto* hn = leaf(app_, "hn", "genus-0 classes with n boundary components");
    hn->add_option("--punctures", n_, "n >= 4")->required();
    on(hn, [this] {
        Record r{"hn", {{"punctures", n_}}, {}, {}};
        Json rows = Json::array();
        for (const auto& c : magic::enumerate_Hn(static_cast<int>(n_)))
            rows.push_back(Json{{"x", c.x}, {"y", c.y}, {"z", c.z}, {"family", magic::genus0_classify(c).to_string()}});
        r.results["count"] = rows.size();
        r.results["rows"] = rows;
        return r;
    });

    auto* mc = leaf(app_, "min-class", "class of least dilatation in H_n");
    mc->add_option("--punctures", n_, "n >= 4")->required();
    on(mc, [this] {
        const mpq_class tol = s_.tol();
        auto best = magic::min_dilatation_class(static_cast<int>(n_), tol);
        Record r{"min-class", {{"punctures", n_}, {"tol", s_.tol_text}}, {}, {}};
        r.results["class"] = class_json(best.cls);
        r.results["lambda"] = approx(best.lambda.get_d(), tol.get_d(), s_.digits);
        r.results["unique"] = best.ties.empty();
        if (!best.ties.empty()) {
            Json ties = Json::array();
            for (const auto& t : best.ties) ties.push_back(class_json(t));
            r.results["ties"] = ties;
        }
        return r;
    });

    auto* mono = leaf(app_, "monodromy", "braid T_{m,p} of a class x,y");
    mono->add_option("--class", cls_, "x,y")->required();
    on(mono, [this] {
        auto c = pair_class(cls_);
        auto mp = cf::monodromy_of(c.x, c.y);
        Record r{"monodromy", {{"class", cls_}}, {}, {}};
        r.results["m"] = mp.m;
        r.results["p"] = mp.p;
        r.results["braid"] = braid_name(mp.m, mp.p);
        return r;
    });

    auto* cls = leaf(app_, "class-of", "class x,y whose monodromy is T_{m,p}");
    cls->add_option("--m", m_)->required();
    cls->add_option("--p", p_)->required();
    on(cls, [this] {
        auto c = cf::class_of_monodromy(m_, p_);
        Record r{"class-of", {{"m", m_}, {"p", p_}}, {}, {}};
        r.results["x"] = c.x;
        r.results["y"] = c.y;
        return r;
    });

    auto* fs = leaf(app_, "fiber-seq", "monodromy and class built from a step sequence");
    fs->add_option("--q", seq_, "comma separated positive integers")->required()->delimiter(',');
    on(fs, [this] {
        std::vector<cf::Int> q(seq_.begin(), seq_.end());
        auto r0 = cf::fiber_from_sequence(q);
        Record r{"fiber-seq", {{"q", seq_}}, {}, {}};
        r.results["m"] = r0.monodromy.m;
        r.results["p"] = r0.monodromy.p;
        r.results["class"] = class_json(r0.cls);
        return r;
    });

    auto* br = app_.add_subcommand("braid", "braid words, normal forms and conjugacy");
    br->fallthrough();
    br->require_subcommand(1);

    auto* bt = leaf(*br, "tmp", "the braid T_{m,p}");
    bt->add_option("--m", m_)->required();
    bt->add_option("--p", p_)->required();
    on(bt, [this] {
        auto w = braid::tmp(static_cast<int>(m_), static_cast<int>(p_));
        Record r{"braid tmp", {{"m", m_}, {"p", p_}}, {}, {}};
        r.results["word"] = w.to_string();
        r.results["exponent_sum"] = w.exponent_sum();
        return r;
    });

    auto* bf = leaf(*br, "forget", "delete one strand");
    bf->add_option("--braid", braid_, "e.g. \"B6: 1 1 2\"")->required();
    bf->add_option("--strand", strand_, "1-based start position")->default_val(1);
    on(bf, [this] {
        auto w = braid::forget_strand(braid::BraidWord::parse(braid_), static_cast<int>(strand_));
        Record r{"braid forget", {{"braid", braid_}, {"strand", strand_}}, {}, {}};
        r.results["word"] = w.to_string();
        return r;
    });

    auto* bn = leaf(*br, "nf", "left normal form");
    bn->add_option("--braid", braid_)->required();
    on(bn, [this] {
        auto nf = braid::normal_form(braid::BraidWord::parse(braid_));
        Record r{"braid nf", {{"braid", braid_}}, {}, {}};
        r.results["normal_form"] = nf.to_string();
        r.results["inf"] = nf.inf;
        r.results["sup"] = nf.sup();
        return r;
    });

    auto* bs = leaf(*br, "sss", "super summit set");
    bs->add_option("--braid", braid_)->required();
    on(bs, [this] {
        auto set = braid::super_summit_set(braid::BraidWord::parse(braid_), s_.budget);
        Record r{"braid sss", {{"braid", braid_}, {"budget", s_.budget}}, {}, {}};
        r.results["size"] = set.size();
        Json rows = Json::array();
        for (const auto& x : set) rows.push_back(Json{{"normal_form", x.to_string()}});
        r.results["rows"] = rows;
        return r;
    });

    auto* bc = leaf(*br, "conjugate", "decide conjugacy");
    bc->add_option("--a", braid_)->required();
    bc->add_option("--b", other_)->required();
    on(bc, [this] {
        auto a = braid::BraidWord::parse(braid_);
        auto b = braid::BraidWord::parse(other_);
        Record r{"braid conjugate", {{"a", braid_}, {"b", other_}, {"budget", s_.budget}}, {}, {}};
        r.results["conjugate"] = braid::are_conjugate(a, b, s_.budget);
        return r;
    });

    auto* te = app_.add_subcommand("teich", "teichmuller polynomial of the fibered face");
    te->fallthrough();
    te->require_subcommand(1);
    on(leaf(*te, "derive", "determinant of u I - M and its basis change"), [] {
        Record r{"teich derive", {}, {}, {}};
        r.results["P_t1_t2_u"] = laurent::derive_teichmuller().to_string();
        r.results["P_s1_s2_s3"] = laurent::teichmuller_s().to_string();
        return r;
    });
    auto* tsp = leaf(*te, "specialize", "specialize at a class");
    tsp->add_option("--class", cls_, "x,y,z")->required();
    on(tsp, [this] {
        auto c = magic::parse_class(cls_);
        auto f = laurent::specialize(laurent::teichmuller_s(), {static_cast<long>(c.x), static_cast<long>(c.y),
                                                                static_cast<long>(c.z)});
        Record r{"teich specialize", {{"class", cls_}}, {}, {}};
        r.results["polynomial"] = f.to_string();
        return r;
    });

    auto* dy = leaf(app_, "dynnikov", "growth rate of a lamination under a braid");
    dy->add_option("--braid", braid_)->required();
    on(dy, [this] {
        lam::EstimateOptions opts;
        opts.max_iters = s_.iters;
        auto est = lam::estimate_dilatation(braid::BraidWord::parse(braid_), opts);
        if (!est.converged) throw Inconclusive("dynnikov estimate did not converge: " + est.note);
        Record r{"dynnikov", {{"braid", braid_}, {"iters", s_.iters}}, {}, {}};
        r.results["lambda"] = approx(est.lambda, std::max(est.spread, 1e-10), s_.digits);
        r.results["iterations"] = est.iterations;
        r.results["seeds_tried"] = est.seeds_tried;
        return r;
    });

    auto* hs = app_.add_subcommand("horseshoe", "horseshoe orbits and braids");
    hs->fallthrough();
    hs->require_subcommand(1);
    auto* hc = leaf(*hs, "codes", "periodic orbit codes of a period");
    hc->add_option("--period", k_)->required();
    on(hc, [this] {
        Record r{"horseshoe codes", {{"period", k_}}, {}, {}};
        Json rows = Json::array();
        for (const auto& c : horseshoe::periodic_codes(static_cast<int>(k_))) rows.push_back(Json{{"code", c.word()}});
        r.results["count"] = rows.size();
        r.results["rows"] = rows;
        return r;
    });
    auto* hb = leaf(*hs, "braid", "template braid of an orbit set");
    hb->add_option("--orbits", orbits_, "e.g. 1,00101")->required();
    on(hb, [this] {
        auto q = horseshoe::parse_orbit_set(orbits_);
        Record r{"horseshoe braid", {{"orbits", orbits_}}, {}, {}};
        r.results["orbits"] = horseshoe::format_orbit_set(q);
        r.results["word"] = horseshoe::braid_from_orbits(q).to_string();
        return r;
    });
    auto* hcert = leaf(*hs, "certify", "search for a horseshoe orbit set realizing T_{m,p}");
    hcert->add_option("--m", m_)->required();
    hcert->add_option("--p", p_)->required();
    on(hcert, [this] {
        horseshoe::CertificateOptions opts;
        opts.budget = s_.budget;
        opts.sss_limit = s_.budget;
        auto cert = horseshoe::horseshoe_certificate(static_cast<int>(m_), static_cast<int>(p_), opts);
        if (!cert.found)
            throw Inconclusive("no certificate found (" + cert.note + "); this is not a proof that none exists");
        Record r{"horseshoe certify", {{"m", m_}, {"p", p_}, {"budget", s_.budget}}, {}, {}};
        r.results["orbits"] = horseshoe::format_orbit_set(cert.orbits);
        r.results["braid"] = cert.braid.to_string();
        r.results["twist_power"] = cert.twist_power;
        r.results["lambda"] = approx(cert.lambda, 1e-4, s_.digits);
        r.results["examined"] = cert.examined;
        r.results["verified"] = horseshoe::verify_certificate(static_cast<int>(m_), static_cast<int>(p_), cert, opts);
        return r;
    });

    auto* tb = leaf(app_, "table", "least dilatations of T_{m,p} for a range of m");
    tb->add_option("m_min", lo_)->required();
    tb->add_option("m_max", hi_)->required();
    on(tb, [this] {
        if (lo_ < 3 || hi_ < lo_) throw DomainError("table needs 3 <= m_min <= m_max");
        std::vector<std::future<Json>> jobs;
        for (long m = lo_; m <= hi_; ++m)
            jobs.push_back(std::async(std::launch::async, table_row, m, s_.digits));
        Record r{"table", {{"m_min", lo_}, {"m_max", hi_}}, {}, {}};
        Json rows = Json::array();
        for (auto& j : jobs) rows.push_back(j.get());
        r.results["rows"] = rows;
        return r;
    });

    auto* as = app_.add_subcommand("asymptotics", "limits of dilatations along families");
    as->fallthrough();
    as->require_subcommand(1);
    auto* l2 = leaf(*as, "log2-probe", "dilatation of (x,1,0) against 2");
    l2->add_option("--x-max", k_)->default_val(30);
    on(l2, [this] {
        const mpq_class tol = s_.tol();
        Record r{"asymptotics log2-probe", {{"x_max", k_}}, {}, {}};
        Json rows = Json::array();
        for (long x = 1; x <= k_; ++x) {
            const double l = magic::dilatation({x, 1, 0}, tol).get_d();
            rows.push_back(Json{{"x", x}, {"lambda", approx(l, tol.get_d(), s_.digits)},
                                {"gap", approx(l - 2.0, tol.get_d(), s_.digits)}});
        }
        r.results["rows"] = rows;
        return r;
    });
    auto* gm = leaf(*as, "golden-mean-probe", "dilatation of (n+1,n,n-1) against the golden mean");
    gm->add_option("--n-max", k_)->default_val(40);
    on(gm, [this] {
        const mpq_class tol = s_.tol();
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        Record r{"asymptotics golden-mean-probe", {{"n_max", k_}}, {}, {}};
        Json rows = Json::array();
        for (long n = 2; n <= k_; ++n) {
            const double l = magic::dilatation({n + 1, n, n - 1}, tol).get_d();
            rows.push_back(Json{{"n", n}, {"lambda", approx(l, tol.get_d(), s_.digits)},
                                {"gap", approx(l - phi, tol.get_d(), s_.digits)}});
        }
        r.results["rows"] = rows;
        return r;
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dilatations, monodromies and braids of the magic manifold", "magicfib"};
    app.require_subcommand(1);
    Settings s;
    bool json = false;
    bool csv = false;
    app.add_flag("--json", json, "JSON output");
    app.add_flag("--csv", csv, "CSV output");
    app.add_option("--tol", s.tol_text, "root isolation tolerance")->default_val("1e-12");
    app.add_option("--budget", s.budget, "super summit and certificate search limit")->default_val(200000);
    app.add_option("--iters", s.iters, "lamination iterations")->default_val(2000);
    app.add_option("--digits", s.digits, "significant digits")->default_val(6)->check(CLI::Range(1, 17));

    Commands commands(app, s);
    commands.install();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }
    if (json && csv) {
        err << "error: --json and --csv are exclusive\n";
        return kUsage;
    }
    const Format fmt = json ? Format::Json : csv ? Format::Csv : Format::Text;
    try {
        Record r = commands.run_selected();
        render(r, fmt, out);
        return kOk;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kUsage;
    } catch (const Inconclusive& e) {
        err << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::invalid_argument& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    }
}

}  // namespace mfib::cli
