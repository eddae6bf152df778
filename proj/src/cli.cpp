#include "chflag/cli.hpp"

#include "chflag/certificate.hpp"
#include "chflag/optimizer.hpp"
#include "chflag/oracle.hpp"
#include "chflag/transcriptions.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace chflag::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ojson strings(const RationalVector& v) {
    auto a = ojson::array();
    for (const auto& x : v) {
        a.push_back(to_fraction_string(x));
    }
    return a;
}

// ---- enumerate

struct EnumerateArgs {
    std::string type = "0";
    int order = 0;
    std::string format = "json";
};

int do_enumerate(const EnumerateArgs& a, std::ostream& out) {
    FlagType sigma = type_by_name(a.type);
    if (a.order < sigma.order() || a.order > 5) {
        throw UsageError("--order must lie between the type order and 5");
    }
    BasisPtr basis = basis_for(sigma, a.order);
    if (a.format == "text") {
        for (std::size_t i = 0; i < basis->size(); ++i) {
            out << basis->name() << "[" << i << "] " << (*basis)[i].graph().to_text() << "\n";
        }
        return kOk;
    }
    ojson j;
    j["type"] = a.type;
    j["order"] = a.order;
    j["basis"] = basis->name();
    j["count"] = basis->size();
    auto flags = ojson::array();
    for (std::size_t i = 0; i < basis->size(); ++i) {
        flags.push_back({{"index", i},
                         {"digraph", (*basis)[i].graph().to_text()},
                         {"labels", (*basis)[i].labels()}});
    }
    j["flags"] = flags;
    out << j.dump(2) << "\n";
    return kOk;
}

// ---- tables

struct TablesArgs {
    std::string which = "all";
    bool diff = false;
    std::string format = "json";
};

ojson sparse(const LinearForm& f) {
    ojson j = ojson::object();
    for (std::size_t h = 0; h < f.size(); ++h) {
        if (f[h] != 0) {
            j[std::to_string(h)] = to_fraction_string(f[h]);
        }
    }
    return j;
}

ojson diff_json(const DiffReport& d) {
    return {{"summary", d.summary()},
            {"matched", d.matched},
            {"total", d.total},
            {"ok", d.ok()},
            {"mismatches", d.mismatches}};
}

void csv_form(std::ostream& out, const std::string& table, const std::string& i,
              const std::string& j, const LinearForm& f, bool skip_zero) {
    for (std::size_t h = 0; h < f.size(); ++h) {
        if (skip_zero && f[h] == 0) {
            continue;
        }
        out << table << "," << i << "," << j << "," << h << "," << to_fraction_string(f[h]) << "\n";
    }
}

int do_tables(const TablesArgs& a, std::ostream& out, std::ostream& err) {
    const ProofForms& pf = proof_forms();
    const bool all = a.which == "all";
    const bool want_cs = all || a.which == "cs";
    const bool want_reg = all || a.which == "reg";
    const bool want_ind = all || a.which == "ind";
    const bool want_fork = all || a.which == "fork";

    std::vector<DiffReport> diffs;
    ojson reg_scale;
    if (a.diff) {
        const PublishedTables& pub = published_tables();
        if (want_cs) {
            diffs.push_back(diff_cs(pf.cs, pub));
        }
        if (want_reg) {
            diffs.push_back(diff_reg(pf.reg, pub));
            RegRows raw = unscaled_reg_rows();
            std::vector<LinearForm> raw_rows = raw.a_rows;
            raw_rows.insert(raw_rows.end(), raw.b_rows.begin(), raw.b_rows.end());
            std::vector<LinearForm> pub_rows = int_rows_as_forms(pub.a_reg);
            auto b_rows = int_rows_as_forms(pub.b_reg);
            pub_rows.insert(pub_rows.end(), b_rows.begin(), b_rows.end());
            auto fitted = fit_scale(raw_rows, pub_rows);
            reg_scale = {{"fitted", fitted ? to_fraction_string(*fitted) : "none"},
                         {"used", pf.reg.scale},
                         {"stated_in_text", pub.reg_scale_in_text}};
            err << "reg: scale fitted from the table = "
                << (fitted ? to_fraction_string(*fitted) : std::string("none")) << ", used "
                << pf.reg.scale << ", stated in the text " << pub.reg_scale_in_text << "\n";
        }
        if (want_ind) {
            diffs.push_back(diff_induction("ind_T", pf.ind_t, pub.ind_t));
            diffs.push_back(diff_induction("ind_V", pf.ind_v, pub.ind_v));
        }
        if (want_fork) {
            diffs.push_back(diff_fork(pf.fork, pub));
        }
        for (const auto& d : diffs) {
            err << d.summary() << "\n";
            for (const auto& m : d.mismatches) {
                err << "  " << m << "\n";
            }
        }
    }
    const bool diff_ok =
        std::all_of(diffs.begin(), diffs.end(), [](const DiffReport& d) { return d.ok(); });

    if (a.format == "csv") {
        out << "table,i,j,h,value\n";
        if (want_cs) {
            for (std::size_t i = 0; i < CSMatrix::kSize; ++i) {
                for (std::size_t j = 0; j < CSMatrix::kSize; ++j) {
                    csv_form(out, "cs", std::to_string(i), std::to_string(j), pf.cs(i, j), true);
                }
            }
        }
        if (want_reg) {
            for (const auto& [name, m] : {std::pair{"A_Reg", &pf.reg.a_reg}, {"B_Reg", &pf.reg.b_reg}}) {
                for (std::size_t j = 0; j < m->size(); ++j) {
                    for (std::size_t h = 0; h < (*m)[j].size(); ++h) {
                        out << name << "," << j << ",," << h << "," << (*m)[j][h] << "\n";
                    }
                }
            }
        }
        if (want_ind) {
            csv_form(out, "ind_T.const", "", "", pf.ind_t.const_part, false);
            csv_form(out, "ind_T.c", "", "", pf.ind_t.c_part, false);
            csv_form(out, "ind_V.const", "", "", pf.ind_v.const_part, false);
            csv_form(out, "ind_V.c", "", "", pf.ind_v.c_part, false);
        }
        if (want_fork) {
            csv_form(out, "fork.linear", "", "", pf.fork.linear, false);
            out << "fork.quadratic_multiplier,,,," << to_fraction_string(pf.fork.quadratic_multiplier)
                << "\n";
        }
        return diff_ok ? kOk : kFailed;
    }

    ojson j;
    if (want_cs) {
        auto rows = ojson::array();
        for (std::size_t i = 0; i < CSMatrix::kSize; ++i) {
            auto row = ojson::array();
            for (std::size_t k = 0; k < CSMatrix::kSize; ++k) {
                row.push_back(sparse(pf.cs(i, k)));
            }
            rows.push_back(row);
        }
        j["cs"] = {{"scale", TableScales::kCauchySchwarz}, {"entries", rows}};
    }
    if (want_reg) {
        j["reg"] = {{"scale", pf.reg.scale}, {"A_Reg", pf.reg.a_reg}, {"B_Reg", pf.reg.b_reg}};
    }
    if (want_ind) {
        j["ind"] = {{"T",
                     {{"scale", TableScales::kInductionT},
                      {"const", strings(pf.ind_t.const_part.coeffs())},
                      {"c", strings(pf.ind_t.c_part.coeffs())}}},
                    {"V",
                     {{"scale", TableScales::kInductionV},
                      {"const", strings(pf.ind_v.const_part.coeffs())},
                      {"c", strings(pf.ind_v.c_part.coeffs())}}}};
    }
    if (want_fork) {
        j["fork"] = {{"scale", TableScales::kFork},
                     {"linear", strings(pf.fork.linear.coeffs())},
                     {"quadratic_multiplier", to_fraction_string(pf.fork.quadratic_multiplier)}};
    }
    if (a.diff) {
        ojson d = ojson::object();
        for (const auto& r : diffs) {
            d[r.name] = diff_json(r);
        }
        if (!reg_scale.is_null()) {
            d["reg_scale"] = reg_scale;
        }
        j["diff"] = d;
    }
    out << j.dump(2) << "\n";
    return diff_ok ? kOk : kFailed;
}

// ---- verify

struct VerifyArgs {
    std::string certificate;
    std::string c;
};

std::string decimal_or_fraction(const Rational& v) {
    return decimal_places(v) ? to_decimal_string(v) : to_fraction_string(v);
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    Certificate cert;
    try {
        cert = load_certificate_file(a.certificate);
        if (!a.c.empty()) {
            cert.threshold_c = parse_rational(a.c);
            cert.validate();
        }
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    VerificationReport report = verify(cert);
    ojson j = report_to_json(report);
    j["c"] = to_fraction_string(cert.threshold_c);
    j["max_coefficient_decimal"] = decimal_or_fraction(report.max_coefficient);
    out << j.dump(2) << "\n";
    err << "c = " << decimal_or_fraction(cert.threshold_c) << ": "
        << (report.valid ? "valid" : "NOT valid") << ", max coefficient "
        << decimal_or_fraction(report.max_coefficient) << ", "
        << (report.monotone_in_c ? "non-increasing in c" : "monotonicity NOT established") << "\n";
    return report.valid ? kOk : kFailed;
}

// ---- search

struct SearchArgs {
    std::string c_lo = "1/3";
    std::string c_hi = "0.4";
    std::string tol_c = "0.0001";
    std::string stop_delta = "0.0001";
    int max_iters = 8;
    std::string seed_cuts;
    std::string trace;
};

std::vector<CutVector> read_seed_cuts(const std::string& path) {
    nlohmann::json j = read_json_file(path);
    if (j.is_object()) {
        return load_certificate(j.dump()).cs_vectors;
    }
    std::vector<CutVector> cuts;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 8) {
            throw std::invalid_argument("seed cuts must be 8-entry vectors");
        }
        CutVector a;
        for (std::size_t i = 0; i < 8; ++i) {
            a[i] = parse_decimal(row[i].get<std::string>());
        }
        cuts.push_back(a);
    }
    return cuts;
}

int do_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    SearchOptions options;
    try {
        options.c_lo = parse_rational(a.c_lo);
        options.c_hi = parse_rational(a.c_hi);
        options.tol_c = parse_rational(a.tol_c);
        options.stop_delta = parse_rational(a.stop_delta);
        options.max_iters = a.max_iters;
        if (!a.seed_cuts.empty()) {
            options.seed_cuts = read_seed_cuts(a.seed_cuts);
        }
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    std::ofstream trace(a.trace);
    if (!trace) {
        throw UsageError("cannot write trace file " + a.trace);
    }
    SearchOutcome outcome;
    try {
        outcome = cutting_plane_search(options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (const auto& rec : outcome.trace.records) {
        trace << record_to_json(rec).dump() << "\n";
        err << "k=" << rec.k << " c_k=" << rec.c_k.get_d() << " min_eig=" << rec.min_eig
            << (rec.cut ? "" : " (no cut)") << "\n";
    }
    err << "stopped: " << outcome.trace.stop_reason << "\n";
    ojson j;
    j["iterations"] = outcome.trace.records.size();
    j["stop_reason"] = outcome.trace.stop_reason;
    j["c_final"] = to_fraction_string(outcome.candidate.threshold_c);
    j["candidate"] = nlohmann::ordered_json::parse(save_certificate(outcome.candidate));
    out << j.dump(2) << "\n";
    return kOk;
}

// ---- oracle

struct OracleArgs {
    std::string check;
    int trials = 200;
    std::uint64_t seed = 1;
};

int do_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<oracle::CheckReport> reports;
    if (a.check == "density") {
        reports.push_back(oracle::density_agreement_check());
    } else if (a.check == "blowup") {
        reports.push_back(oracle::blowup_check(a.trials, a.seed));
    } else {
        for (const char* sigma : {"0", "1", "beta"}) {
            const int k = type_by_name(sigma).order();
            for (int l = std::max(k, 1); l <= 4; ++l) {
                for (int mid = k; mid <= l; ++mid) {
                    for (int lp = k; lp <= mid; ++lp) {
                        oracle::ChainRuleConfig cfg{sigma, lp, mid, l, true, a.seed};
                        reports.push_back(oracle::chain_rule_check(cfg, 0));
                    }
                }
            }
            oracle::ChainRuleConfig random{sigma, k + 1, 4, 5, false, a.seed};
            reports.push_back(oracle::chain_rule_check(random, a.trials));
        }
    }
    bool ok = true;
    auto arr = ojson::array();
    std::size_t violations = 0;
    for (const auto& r : reports) {
        ok = ok && r.ok();
        violations += r.violations.size();
        arr.push_back(r.to_json());
    }
    ojson j;
    j["check"] = a.check;
    j["ok"] = ok;
    j["reports"] = arr;
    out << j.dump(2) << "\n";
    err << a.check << ": " << reports.size() << " report(s), " << violations << " violation(s)\n";
    return ok ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flag-algebra toolkit for triangle-free digraphs", "chflag"};
    app.require_subcommand(1);

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "List flag isomorphism classes");
    enumerate->add_option("--type", en.type, "Type: 0, 1, beta, T or V")
        ->check(CLI::IsMember({"0", "1", "beta", "T", "V"}))
        ->required();
    enumerate->add_option("--order", en.order, "Flag order (at most 5)")->required();
    enumerate->add_option("--format", en.format)->check(CLI::IsMember({"json", "text"}));

    TablesArgs ta;
    auto* tables = app.add_subcommand("tables", "Regenerate the inequality tables");
    tables->add_option("--which", ta.which)->check(CLI::IsMember({"cs", "reg", "ind", "fork", "all"}));
    tables->add_flag("--diff", ta.diff, "Compare against the transcribed tables");
    tables->add_option("--format", ta.format)->check(CLI::IsMember({"json", "csv"}));

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Verify a certificate exactly");
    verify_cmd->add_option("--certificate", va.certificate)->required();
    verify_cmd->add_option("--c", va.c, "Override the threshold c");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Run the cutting-plane search");
    search->add_option("--c-lo", sa.c_lo);
    search->add_option("--c-hi", sa.c_hi);
    search->add_option("--tol-c", sa.tol_c);
    search->add_option("--stop-delta", sa.stop_delta);
    search->add_option("--max-iters", sa.max_iters)->check(CLI::PositiveNumber);
    search->add_option("--seed-cuts", sa.seed_cuts);
    search->add_option("--trace", sa.trace, "JSON-lines trace output")->required();

    OracleArgs oa;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-checks");
    oracle_cmd->add_option("--check", oa.check)
        ->check(CLI::IsMember({"density", "chain", "blowup"}))
        ->required();
    oracle_cmd->add_option("--trials", oa.trials)->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--seed", oa.seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*enumerate) {
            return do_enumerate(en, out);
        }
        if (*tables) {
            return do_tables(ta, out, err);
        }
        if (*verify_cmd) {
            return do_verify(va, out, err);
        }
        if (*search) {
            return do_search(sa, out, err);
        }
        return do_oracle(oa, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace chflag::cli
