#include "fanogap/dh.hpp"
#include "fanogap/formulas.hpp"
#include "fanogap/gap.hpp"
#include "fanogap/headline.hpp"
#include "fanogap/threshold.hpp"
#include "fanogap/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace fanogap;
using nlohmann::json;

namespace {

constexpr int kExitRefuted = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitError = 1;

struct RunConfig {
    std::string command;
    int n = 0;
    int n_max = 0;
    std::optional<int> d;
    int ell = 2;
    std::string width = "1/1099511627776";
    std::string grid = "1/8";
    unsigned bits = kDefaultBits;
    unsigned jobs = 1;
    std::string format;
    std::string out;
    std::string builtin;
    std::string file;
    std::string table;
    bool decimal = false;
};

// Decimal digits of q rounded toward -inf (up = false) or +inf (up = true).
std::string decimal(const Rational& q, int digits, bool up)
{
    const Integer scale = ipow(10, static_cast<unsigned long>(digits));
    const Rational s = q * Rational(scale);
    Integer k = up ? s.ceil() : s.floor();
    const bool neg = k < 0;
    if (neg) {
        k = -k;
    }
    std::string body = k.get_str();
    if (static_cast<int>(body.size()) <= digits) {
        body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    return (neg ? "-" : "") + body;
}

std::string decimal_range(const Enclosure& e, int digits = 6)
{
    return "[" + decimal(e.lo(), digits, false) + ", " + decimal(e.hi(), digits, true) + "]";
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot open output file " + path);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_meta(const RunConfig& cfg, double seconds, const json& extra)
{
    if (cfg.out.empty()) {
        return;
    }
    const std::time_t now = std::time(nullptr);
    std::ostringstream ts;
    ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    json meta = {{"schema", kSchema},
                 {"command", cfg.command},
                 {"timestamp", ts.str()},
                 {"jobs", cfg.jobs},
                 {"bits", cfg.bits},
                 {"seconds", seconds}};
    meta.update(extra);
    std::ofstream(cfg.out + ".meta.json") << meta.dump(2) << "\n";
}

int exit_code(const std::vector<Certificate>& certs)
{
    bool undecided = false;
    for (const Certificate& c : certs) {
        if (c.verdict == Verdict::Refuted) {
            return kExitRefuted;
        }
        if (c.verdict == Verdict::Undecided) {
            undecided = true;
        }
    }
    return undecided ? kExitUndecided : 0;
}

int cmd_verify(const RunConfig& cfg)
{
    if (cfg.n_max < 5) {
        throw std::invalid_argument("verify: --n-max must be >= 5");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Certificate> certs = sweep(cfg.n_max, cfg.d, cfg.jobs);
    long counts[3] = {0, 0, 0};
    json list = json::array();
    for (const Certificate& c : certs) {
        ++counts[static_cast<int>(c.verdict)];
        list.push_back(to_json(c));
    }
    const json body = {{"schema", kSchema},
                       {"command", "verify"},
                       {"n_max", cfg.n_max},
                       {"d_filter", cfg.d ? json(*cfg.d) : json(nullptr)},
                       {"summary", {{"total", certs.size()},
                                    {"certified", counts[0]},
                                    {"refuted", counts[1]},
                                    {"undecided", counts[2]}}},
                       {"certificates", list}};
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Output out(cfg.out);
    if (cfg.format == "text") {
        for (const Certificate& c : certs) {
            out.stream() << "n=" << c.n << " d=" << c.d << " " << to_string(c.verdict) << " (" << c.route << ")\n";
        }
        out.stream() << certs.size() << " certificates: " << counts[0] << " certified, " << counts[1]
                     << " refuted, " << counts[2] << " undecided\n";
    } else {
        out.stream() << body.dump(2) << "\n";
    }
    write_meta(cfg, secs, {{"certificates", certs.size()}});
    return exit_code(certs);
}

int cmd_revalidate(const RunConfig& cfg)
{
    std::ifstream in(cfg.file);
    if (!in) {
        throw std::runtime_error("revalidate: cannot read " + cfg.file);
    }
    const json j = json::parse(in);
    if (j.at("schema") != kSchema) {
        throw std::runtime_error("revalidate: unknown schema");
    }
    std::vector<Certificate> certs;
    long bad = 0;
    for (const json& c : j.at("certificates")) {
        if (!revalidate(c)) {
            ++bad;
        }
        certs.push_back(certificate_from_json(c));
    }
    std::cout << certs.size() << " certificates re-checked, " << bad << " inconsistent\n";
    if (bad > 0) {
        return kExitRefuted;
    }
    return exit_code(certs);
}

void emit_table(const RunConfig& cfg, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    Output out(cfg.out);
    std::ostream& os = out.stream();
    if (cfg.format == "json") {
        json a = json::array();
        for (const auto& row : rows) {
            json o;
            for (std::size_t i = 0; i < header.size(); ++i) {
                o[header[i]] = row[i];
            }
            a.push_back(o);
        }
        os << json{{"schema", kSchema}, {"table", cfg.table}, {"rows", a}}.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        os << (i ? "," : "") << header[i];
    }
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << row[i];
        }
        os << "\n";
    }
}

std::vector<std::string> entry_row(const TableEntry& e, bool dec)
{
    std::vector<std::string> row = {std::to_string(e.key),
                                     e.integer ? std::to_string(*e.integer) : "",
                                     e.value.lo().str(),
                                     e.value.hi().str(),
                                     std::to_string(e.bits),
                                     e.cited ? "cited" : "computed"};
    if (dec) {
        row.push_back(e.value.is_exact() && e.value.lo().is_zero() ? "" : decimal_range(e.value, 4));
    }
    return row;
}

int cmd_tables(RunConfig cfg)
{
    if (cfg.format.empty()) {
        cfg.format = "csv";
    }
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    const std::vector<std::string> entry_cols = {"value", "lo", "hi", "bits", "status"};
    if (cfg.table == "d-of-r" || cfg.table == "r-of-d") {
        const bool by_r = cfg.table == "d-of-r";
        header = {by_r ? "r" : "d", by_r ? "d(r)" : "r(d)"};
        header.insert(header.end(), entry_cols.begin() + 1, entry_cols.end());
        if (cfg.decimal) {
            header.emplace_back("decimal (display only)");
        }
        if (by_r) {
            TableEntry r3 = d_threshold_r3();
            rows.push_back(entry_row(r3, cfg.decimal));
            for (int r = 4; r <= 10; ++r) {
                rows.push_back(entry_row(d_threshold(r, cfg.bits), cfg.decimal));
            }
        } else {
            for (int d = 3; d <= 8; ++d) {
                rows.push_back(entry_row(r_threshold(d, cfg.bits), cfg.decimal));
            }
        }
    } else if (cfg.table == "c-seq") {
        if (cfg.n < 1) {
            throw std::invalid_argument("tables c-seq: --n required");
        }
        const CSequence cs = c_sequence(cfg.n);
        header = {"r", "c_r"};
        for (std::size_t r = 0; r < cs.c.size(); ++r) {
            rows.push_back({std::to_string(r), cs.c[r].get_str()});
        }
    } else if (cfg.table == "blowup-vol") {
        if (cfg.n < 3) {
            throw std::invalid_argument("tables blowup-vol: --n >= 3 required");
        }
        header = {"n", "deg_Y", "volume", "segre", "two_n_pow_n", "below_two_n_pow_n"};
        const Rational target = two_n_pow_n(cfg.n);
        for (int dy = 1; dy <= cfg.n; ++dy) {
            const Rational v = vol_blowup_hyperplane_subvariety(cfg.n, dy);
            rows.push_back({std::to_string(cfg.n), std::to_string(dy), v.str(), vol_blowup_segre(cfg.n, dy).str(),
                            target.str(), v < target ? "yes" : "no"});
        }
    } else {
        throw std::invalid_argument("tables: unknown table '" + cfg.table + "'");
    }
    emit_table(cfg, header, rows);
    return 0;
}

int cmd_threshold(const RunConfig& cfg)
{
    if (!cfg.d) {
        throw std::invalid_argument("threshold: --d required");
    }
    const Rational width = Rational::parse(cfg.width);
    const BlowupModel m = build_model(cfg.n, *cfg.d, cfg.ell);
    const ThresholdResult t = solve_T(m, width);
    json body = {{"schema", kSchema}, {"n", cfg.n}, {"d", *cfg.d}, {"ell", cfg.ell}, {"A", m.A.str()}, {"result", to_json(t)}};
    std::optional<Enclosure> closed;
    if (*cfg.d == cfg.n && (cfg.ell == 1 || cfg.ell == 2)) {
        closed = closed_form_T(cfg.n, cfg.ell == 1 ? ClosedForm::DEqNEll1 : ClosedForm::DEqNEll2, cfg.bits);
    } else if (*cfg.d == cfg.n - 1 && (cfg.ell == 1 || cfg.ell == 2)) {
        closed = closed_form_T(cfg.n, cfg.ell == 1 ? ClosedForm::DEqNMinus1Ell1 : ClosedForm::DEqNMinus1Ell2, cfg.bits);
    }
    if (closed) {
        body["closed_form_T"] = to_json(*closed);
    }
    Output out(cfg.out);
    if (cfg.format == "json") {
        out.stream() << body.dump(2) << "\n";
    } else {
        out.stream() << "n=" << cfg.n << " d=" << *cfg.d << " ell=" << cfg.ell << " A=" << m.A << "\n"
                     << "T in " << decimal_range(t.T) << " (" << t.method << ")\n"
                     << "phi(T) in " << decimal_range(t.phi_at_T) << "\n";
        if (closed) {
            out.stream() << "closed form T in " << decimal_range(*closed) << "\n";
        }
    }
    return 0;
}

int cmd_toric(const RunConfig& cfg)
{
    HalfspaceRep H;
    if (!cfg.file.empty()) {
        std::ifstream in(cfg.file);
        if (!in) {
            throw std::runtime_error("toric: cannot read " + cfg.file);
        }
        H = parse_halfspace(in);
    } else if (!cfg.builtin.empty()) {
        H = builtin(cfg.builtin, cfg.n);
    } else {
        throw std::invalid_argument("toric: --builtin or --file required");
    }
    const PolytopeGeometry g = volume_barycenter(H);
    const bool reflexive = H.is_reflexive();
    json body = {{"schema", kSchema}, {"n", H.n}, {"reflexive", reflexive}, {"geometry", to_json(g)}};
    std::optional<DeltaResult> delta;
    if (reflexive) {
        delta = delta_toric(H);
        body["delta"] = {{"value", delta->delta.str()}, {"facet_index", delta->facet_index}};
    }
    Output out(cfg.out);
    if (cfg.format == "json") {
        out.stream() << body.dump(2) << "\n";
        return 0;
    }
    std::ostream& os = out.stream();
    os << "dimension " << H.n << ", " << H.facets.size() << " facets, " << g.vertices.size() << " vertices\n"
       << "volume " << g.volume << "\nbarycenter (";
    for (std::size_t i = 0; i < g.barycenter.size(); ++i) {
        os << (i ? ", " : "") << g.barycenter[i];
    }
    os << ")\n";
    if (delta) {
        os << "delta = " << delta->delta << "\n";
    } else {
        os << "not reflexive; delta not computed\n";
    }
    return 0;
}

int cmd_dh(RunConfig cfg)
{
    if (cfg.format.empty()) {
        cfg.format = "csv";
    }
    const QuadricDH dh = build_quadric_dh(cfg.n);
    Output out(cfg.out);
    if (cfg.format == "csv") {
        write_rho_csv(out.stream(), dh, Rational::parse(cfg.grid), cfg.decimal);
        return 0;
    }
    const LocalizationReport loc = check_localization_identity(cfg.n);
    const FNonnegReport F = check_F_nonneg(cfg.n);
    const IntersectionReport I = check_intersection_expansion(cfg.n);
    const auto opt = [](const std::optional<Rational>& q) { return q ? json(q->str()) : json(nullptr); };
    const json body = {{"schema", kSchema},
                       {"n", cfg.n},
                       {"rho", to_json(dh.rho)},
                       {"vol_fn", to_json(dh.vol_fn)},
                       {"localization", {{"expansion_constant", opt(loc.expansion_constant)},
                                         {"fg_constant", opt(loc.fg_constant)},
                                         {"fg_vanishes", loc.fg_vanishes},
                                         {"ok", loc.ok}}},
                       {"F", {{"F_n", F.F_at_n_zero}, {"F_prime_n", F.F_prime_at_n_zero},
                              {"F_second", F.F_second_closed_form}, {"nonneg", F.F_nonneg_on_n_2n},
                              {"F_2n", F.F_at_2n.str()}}},
                       {"intersection", {{"first_piece", I.first_piece_matches}, {"difference_is_F", I.difference_is_F},
                                         {"grid_points", I.grid_points}, {"violations", I.violations}}}};
    if (cfg.format == "json") {
        out.stream() << body.dump(2) << "\n";
    } else {
        out.stream() << body.dump() << "\n";
    }
    return loc.ok && F.ok() && I.ok() ? 0 : kExitRefuted;
}

int cmd_volumes(const RunConfig& cfg)
{
    const HeadlineReport r = headline_check(cfg.n);
    Output out(cfg.out);
    if (cfg.format == "text") {
        std::ostream& os = out.stream();
        os << "n=" << r.n << " largest " << r.largest << " second " << r.second_largest << " (2n^n = "
           << two_n_pow_n(r.n) << ")\n";
        for (const Candidate& c : r.at_two_n_n) {
            os << "  = 2n^n  " << c.family << "\n";
        }
        for (const Candidate& c : r.strictly_below) {
            os << "  < 2n^n  " << c.family << " ";
            if (c.is_upper_bound) {
                os << "(bound) " << decimal(c.value, 3, true) << "\n";
            } else {
                os << c.value << "\n";
            }
        }
        os << (r.ok ? "ok" : "FAILED") << "\n";
    } else {
        out.stream() << to_json(r).dump(2) << "\n";
    }
    return r.ok ? 0 : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified checks for the anticanonical volume gap of K-semistable Fano manifolds"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_common = [&](CLI::App* sub, const std::string& formats) {
        sub->add_option("--bits", cfg.bits, "Working precision in bits")->check(CLI::Range(64u, 4096u));
        sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(CLI::detail::split(formats, ',')));
        sub->add_option("--out", cfg.out, "Output path (stdout if omitted)");
    };

    auto* verify = app.add_subcommand("verify", "Certify every (n, d) with 3 <= d <= n-1");
    verify->add_option("--n-max", cfg.n_max, "Largest dimension")->required();
    verify->add_option("--d", cfg.d, "Keep a single d");
    add_common(verify, "json,text");

    auto* reval = app.add_subcommand("revalidate", "Re-check a certificate bundle from its witnesses");
    reval->add_option("--file", cfg.file, "Bundle written by verify")->required()->check(CLI::ExistingFile);

    auto* tables = app.add_subcommand("tables", "Reproduce threshold and volume tables");
    tables->add_option("which", cfg.table, "d-of-r, r-of-d, c-seq or blowup-vol")
        ->required()
        ->check(CLI::IsMember({"d-of-r", "r-of-d", "c-seq", "blowup-vol"}));
    tables->add_option("--n", cfg.n, "Dimension for c-seq and blowup-vol");
    tables->add_flag("--decimal", cfg.decimal, "Add a display-only decimal column");
    add_common(tables, "csv,json");

    auto* threshold = app.add_subcommand("threshold", "Enclose T and phi(T) for a blowup model");
    threshold->add_option("--n", cfg.n)->required();
    threshold->add_option("--d", cfg.d)->required();
    threshold->add_option("--ell", cfg.ell, "Index ell of the normal bundle")->check(CLI::PositiveNumber);
    threshold->add_option("--width", cfg.width, "Bracket width for T, as a rational");
    add_common(threshold, "text,json");

    auto* toric = app.add_subcommand("toric", "Volume, barycenter and delta of a polytope");
    toric->add_option("--builtin", cfg.builtin, "Builtin polytope")->check(CLI::IsMember(builtin_names()));
    toric->add_option("--file", cfg.file, "Half-space description")->check(CLI::ExistingFile);
    toric->add_option("--n", cfg.n, "Dimension for builtins")->default_val(3);
    add_common(toric, "text,json");

    auto* dh = app.add_subcommand("dh", "Duistermaat-Heckman density of the quadric");
    dh->add_option("--n", cfg.n)->required();
    dh->add_option("--grid", cfg.grid, "Rational sampling step on [0,2]");
    dh->add_flag("--decimal", cfg.decimal, "Add a display-only decimal column");
    add_common(dh, "csv,json,text");

    auto* volumes = app.add_subcommand("volumes", "Compare every implemented family with 2n^n");
    volumes->add_option("--n", cfg.n)->required();
    add_common(volumes, "json,text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg);
        }
        if (reval->parsed()) {
            cfg.command = "revalidate";
            return cmd_revalidate(cfg);
        }
        if (tables->parsed()) {
            cfg.command = "tables";
            return cmd_tables(cfg);
        }
        if (threshold->parsed()) {
            cfg.command = "threshold";
            return cmd_threshold(cfg);
        }
        if (toric->parsed()) {
            cfg.command = "toric";
            return cmd_toric(cfg);
        }
        if (dh->parsed()) {
            cfg.command = "dh";
            return cmd_dh(cfg);
        }
        if (volumes->parsed()) {
            cfg.command = "volumes";
            return cmd_volumes(cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
