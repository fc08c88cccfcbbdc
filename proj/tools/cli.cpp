#include "hcov/cli.hpp"

#include "hcov/errors.hpp"
#include "hcov/formal_degree.hpp"
#include "hcov/whittaker.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace hcov {

namespace {

using nlohmann::json;

struct JobSpec {
    std::string command;
    std::string type;
    int rank = 0;
    long n = 1;
    long q_short = 1;
    std::string q;
    int L = -1;
    double tol = default_tolerance;
    std::string sigma = "steinberg";
    std::string grading = "GQn";
    std::string format = "json";
    std::string out_path;
};

json rational_json(const Rational& x)
{
    return json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

json integer_list(const std::vector<Integer>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(x.get_str());
    return a;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

std::string csv_row(const std::vector<std::string>& cells)
{
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i)
        line += (i ? "," : "") + csv_field(cells[i]);
    return line + "\n";
}

struct Output {
    json doc;
    std::vector<std::vector<std::string>> table; // csv rows, header first
    std::string pretty;
    int code = exit_code::ok;
};

json header(const JobSpec& job, const CoverDatum& cover)
{
    return json{{"schema", "hecke-covers/1"},
                {"command", job.command},
                {"type", cover.base().spec().name()},
                {"rank", cover.rank()},
                {"n", cover.n()},
                {"q_short", cover.q_short()}};
}

CoverDatum cover_of(const JobSpec& job)
{
    if (job.type.size() != 1)
        throw ValidationError("--type must be a single letter A-G, got '" + job.type + "'");
    CartanSpec spec{static_cast<char>(std::toupper(static_cast<unsigned char>(job.type[0]))), job.rank};
    spec.validate();
    return build_cover(RootDatum(spec), job.n, job.q_short);
}

Output cmd_datum(const JobSpec& job)
{
    const CoverDatum cover = cover_of(job);
    Output o;
    o.doc = header(job, cover);
    json nas = json::array();
    for (int i = 0; i < cover.rank(); ++i)
        nas.push_back(cover.n_alpha_simple(i));
    o.doc["n_alpha"] = nas;
    json basis = json::array();
    const IntMatrix& b = cover.lattice_basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < b.cols(); ++j)
            row.push_back(b(i, j).get_str());
        basis.push_back(row);
    }
    o.doc["Y_Qn_basis"] = basis;
    o.doc["Y_Qn_is_nY"] = lattice_is_nY(cover);
    const FiniteAbelianGroup z = center_group(cover);
    const FiniteAbelianGroup h = heart_center_group(cover);
    o.doc["center_invariant_factors"] = integer_list(z.invariant_factors);
    o.doc["heart_invariant_factors"] = integer_list(h.invariant_factors);
    o.doc["oasitic_condition"] = oasitic_condition(cover.base().spec());
    if (cover.q_short() == 1)
        o.doc["oasitic"] = is_oasitic(cover);
    else
        o.doc["oasitic"] = nullptr;

    std::ostringstream ss;
    ss << cover.name() << (cover.q_short() == 1 ? "" : " q_short=" + std::to_string(cover.q_short())) << "\n";
    ss << "  n_alpha (simple): " << nas.dump() << "\n";
    ss << "  Y_Qn basis rows:  " << basis.dump() << (lattice_is_nY(cover) ? "  (= nY)" : "") << "\n";
    ss << "  center:           " << z.to_string() << "\n";
    ss << "  heart:            " << h.to_string() << "\n";
    if (cover.q_short() == 1)
        ss << "  oasitic:          " << (is_oasitic(cover) ? "yes" : "no") << " (" << oasitic_condition(cover.base().spec())
           << ")\n";
    o.pretty = ss.str();

    o.table.push_back({"field", "value"});
    o.table.push_back({"type", cover.base().spec().name()});
    o.table.push_back({"n", std::to_string(cover.n())});
    o.table.push_back({"n_alpha", nas.dump()});
    o.table.push_back({"Y_Qn_basis", basis.dump()});
    o.table.push_back({"center", z.to_string()});
    o.table.push_back({"heart", h.to_string()});
    o.table.push_back({"oasitic", cover.q_short() == 1 ? (is_oasitic(cover) ? "true" : "false") : ""});
    return o;
}

Output cmd_whittaker(const JobSpec& job)
{
    const CoverDatum cover = cover_of(job);
    if (cover.q_short() != 1)
        throw ValidationError("Whittaker dimensions are defined for q_short = 1 only");
    if (!is_oasitic(cover))
        throw ValidationError(cover.name() + " is not oasitic; the table requires " +
                              oasitic_condition(cover.base().spec()));
    const AffineWeylGroup group(cover);
    const auto reports = whittaker_reports(group);
    const auto& cal = frozen_convention(cover.base().spec());
    Output o;
    o.doc = header(job, cover);
    o.doc["convention"] = json{{"sign_convention", to_string(cal.convention)},
                               {"calibration_n", cal.calibration_n},
                               {"calibration_character", cal.character_label}};
    json rows = json::array();
    o.table.push_back({"character", "weyl_character", "brute_force", "closed_form", "agree"});
    std::ostringstream ss;
    ss << cover.name() << "  (sign convention " << to_string(cal.convention) << ")\n";
    ss << std::left << std::setw(16) << "character" << std::setw(14) << "W-character" << std::setw(12) << "burnside"
       << "closed form\n";
    for (const auto& r : reports) {
        rows.push_back(json{{"character", r.character},
                            {"weyl_character", r.weyl_character},
                            {"brute_force", r.brute_force_dimension.get_str()},
                            {"closed_form", r.closed_form_dimension.get_str()},
                            {"agree", r.agree}});
        o.table.push_back({r.character, r.weyl_character, r.brute_force_dimension.get_str(),
                           r.closed_form_dimension.get_str(), r.agree ? "true" : "false"});
        ss << std::left << std::setw(16) << r.character << std::setw(14) << r.weyl_character << std::setw(12)
           << r.brute_force_dimension.get_str() << r.closed_form_dimension.get_str() << (r.agree ? "" : "  MISMATCH")
           << "\n";
        if (!r.agree)
            o.code = exit_code::internal;
    }
    o.doc["rows"] = rows;
    o.pretty = ss.str();
    return o;
}

LengthSelector grading_of(const std::string& g)
{
    if (g == "GQn")
        return LengthSelector::GQn;
    if (g == "G")
        return LengthSelector::G;
    throw ValidationError("--grading must be G or GQn, got '" + g + "'");
}

Output cmd_formal_degree(const JobSpec& job)
{
    if (job.q.empty())
        throw ValidationError("formal-degree requires --q");
    if (job.L < 0)
        throw ValidationError("formal-degree requires --L >= 0");
    const Rational q = parse_rational(job.q);
    const CoverDatum cover = cover_of(job);
    const AffineWeylGroup group(cover);
    const HeckeCharacter chi = parse_character(group, job.sigma);
    const LengthSelector grading = grading_of(job.grading);
    const DegreeSeries s = formal_degree_inverse(group, chi, q, job.L, job.tol, grading, false);
    const Rational c = canonical_measure_constant(cover.base(), q);

    Output o;
    o.doc = header(job, cover);
    o.doc["sigma"] = character_label(group, chi);
    o.doc["square_integrable"] = is_square_integrable(group, chi);
    o.doc["q"] = rational_json(q);
    o.doc["L"] = job.L;
    o.doc["tolerance"] = job.tol;
    o.doc["grading"] = job.grading;
    json lengths = json::array();
    o.table.push_back({"l", "count", "contribution", "partial_sum"});
    for (int l = 0; l <= s.L; ++l) {
        const auto k = static_cast<std::size_t>(l);
        lengths.push_back(json{{"l", l},
                               {"count", s.counts[k]},
                               {"contribution", rational_json(s.contributions[k])},
                               {"partial_sum", rational_json(s.partial_sums[k])}});
        o.table.push_back({std::to_string(l), std::to_string(s.counts[k]), to_string(s.contributions[k]),
                           to_string(s.partial_sums[k])});
    }
    o.doc["lengths"] = lengths;
    o.doc["converged"] = s.converged;
    o.doc["diverging"] = s.diverging;
    o.doc["diagnostic"] = s.diagnostic;
    o.doc["ratio"] = s.ratio ? rational_json(*s.ratio) : json(nullptr);
    o.doc["relative_tail"] = rational_json(s.relative_tail);
    o.doc["limit_estimate"] = rational_json(s.limit_estimate);
    o.doc["canonical_measure_constant"] = rational_json(c);
    o.doc["canonical_measure_polynomial"] = canonical_measure_polynomial(cover.base()).to_string();

    std::ostringstream ss;
    ss << cover.name() << "  sigma=" << character_label(group, chi) << "  q=" << to_string(q) << "  L=" << job.L
       << "  grading=" << job.grading << "\n";
    ss << "  S_L = " << to_string(s.partial_sums.back()) << " ~ " << s.partial_sums.back().get_d() << "\n";
    ss << "  " << s.diagnostic << "\n";
    if (s.converged) {
        const Rational deg = 1 / s.limit_estimate;
        const Rational deg_c = degree_with_canonical_measure(s, c);
        o.doc["degree"] = rational_json(deg);
        o.doc["degree_canonical"] = rational_json(deg_c);
        ss << "  deg^-1 ~ " << s.limit_estimate.get_d() << "   deg ~ " << deg.get_d() << "   deg (canonical) ~ "
           << deg_c.get_d() << "\n";
    } else {
        o.doc["degree"] = nullptr;
        o.doc["degree_canonical"] = nullptr;
        o.code = exit_code::not_converged;
    }
    o.pretty = ss.str();
    return o;
}

Output cmd_lengths(const JobSpec& job)
{
    if (job.L < 0)
        throw ValidationError("lengths requires --L >= 0");
    const CoverDatum cover = cover_of(job);
    const AffineWeylGroup group(cover);
    const auto ball = group.enumerate_ball(job.L, grading_of(job.grading));
    Output o;
    o.doc = header(job, cover);
    o.doc["L"] = job.L;
    o.doc["grading"] = job.grading;
    json rows = json::array();
    o.table.push_back({"y", "s", "l_G", "l_GQn"});
    std::ostringstream ss;
    ss << std::left << std::setw(24) << "y" << std::setw(16) << "s" << std::setw(6) << "l_G" << "l_GQn\n";
    for (const auto& e : ball) {
        const std::string y = format_vector(e.w.y);
        const std::string s = format_weyl_word(cover.base(), e.w.s);
        rows.push_back(json{{"y", y}, {"s", s}, {"l_G", e.l_G}, {"l_GQn", e.l_GQn}});
        o.table.push_back({y, s, std::to_string(e.l_G), std::to_string(e.l_GQn)});
        ss << std::left << std::setw(24) << y << std::setw(16) << s << std::setw(6) << e.l_G << e.l_GQn << "\n";
    }
    o.doc["rows"] = rows;
    o.pretty = ss.str();
    return o;
}

Output cmd_poincare(const JobSpec& job)
{
    if (job.L < 0)
        throw ValidationError("poincare requires --L >= 0");
    const CoverDatum cover = cover_of(job);
    const AffineWeylGroup group(cover);
    std::vector<std::uint64_t> by_gqn(static_cast<std::size_t>(job.L) + 1, 0);
    std::vector<std::uint64_t> by_g(static_cast<std::size_t>(job.L) + 1, 0);
    for (const auto& e : group.enumerate_ball(job.L, LengthSelector::GQn))
        ++by_gqn[static_cast<std::size_t>(e.l_GQn)];
    for (const auto& e : group.enumerate_ball(job.L, LengthSelector::G))
        ++by_g[static_cast<std::size_t>(e.l_G)];
    Output o;
    o.doc = header(job, cover);
    o.doc["L"] = job.L;
    o.doc["counts_l_G"] = by_g;
    o.doc["counts_l_GQn"] = by_gqn;
    o.table.push_back({"l", "count_l_G", "count_l_GQn"});
    std::ostringstream ss;
    ss << cover.name() << "  graded counts\n" << std::left << std::setw(6) << "l" << std::setw(12) << "l_G" << "l_GQn\n";
    for (int l = 0; l <= job.L; ++l) {
        const auto k = static_cast<std::size_t>(l);
        o.table.push_back({std::to_string(l), std::to_string(by_g[k]), std::to_string(by_gqn[k])});
        ss << std::left << std::setw(6) << l << std::setw(12) << by_g[k] << by_gqn[k] << "\n";
    }
    o.pretty = ss.str();
    return o;
}

void emit(const Output& o, const JobSpec& job, std::ostream& out)
{
    if (job.format == "json") {
        out << o.doc.dump(2) << "\n";
    } else if (job.format == "csv") {
        for (const auto& row : o.table)
            out << csv_row(row);
    } else {
        out << o.pretty;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hecke algebras, formal degrees and Whittaker dimensions of covering groups", "hecke-covers"};
    app.require_subcommand(1);
    JobSpec job;

    auto add_common = [&job](CLI::App* sub, bool needs_q, bool needs_L) {
        sub->add_option("--type", job.type, "Cartan type letter A-G")->required();
        sub->add_option("--rank", job.rank, "rank")->required()->check(CLI::PositiveNumber);
        sub->add_option("--n", job.n, "degree of the cover")->check(CLI::PositiveNumber);
        sub->add_option("--q-short", job.q_short, "Q on short coroots")->check(CLI::PositiveNumber);
        sub->add_option("--format", job.format, "json | csv | pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--out", job.out_path, "write output to this file");
        if (needs_q)
            sub->add_option("--q", job.q, "residue field size, rational > 1");
        if (needs_L)
            sub->add_option("--L", job.L, "truncation length / ball radius");
    };

    auto* datum = app.add_subcommand("datum", "cover datum, Y_{Q,n}, centers, oasitic flag");
    add_common(datum, false, false);
    auto* whit = app.add_subcommand("whittaker", "Whittaker dimensions of the discrete-series characters");
    add_common(whit, false, false);
    auto* fd = app.add_subcommand("formal-degree", "truncated formal-degree series of a character");
    add_common(fd, true, true);
    fd->add_option("--tol", job.tol, "relative tail tolerance")->check(CLI::PositiveNumber);
    fd->add_option("--sigma", job.sigma, "steinberg | trivial | xi(-1,1,...)");
    fd->add_option("--grading", job.grading, "G | GQn");
    auto* len = app.add_subcommand("lengths", "l_G and l_GQn on a ball");
    add_common(len, false, true);
    len->add_option("--grading", job.grading, "ball radius measured in G | GQn");
    auto* poin = app.add_subcommand("poincare", "graded element counts under l_G and l_GQn");
    add_common(poin, false, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::validation;
    }
    job.command = app.get_subcommands().front()->get_name();

    try {
        Output o;
        if (job.command == "datum")
            o = cmd_datum(job);
        else if (job.command == "whittaker")
            o = cmd_whittaker(job);
        else if (job.command == "formal-degree")
            o = cmd_formal_degree(job);
        else if (job.command == "lengths")
            o = cmd_lengths(job);
        else
            o = cmd_poincare(job);
        if (job.out_path.empty()) {
            emit(o, job, out);
        } else {
            std::ofstream f(job.out_path);
            if (!f)
                throw ValidationError("cannot open " + job.out_path + " for writing");
            emit(o, job, f);
        }
        if (o.code == exit_code::not_converged)
            err << "error: series did not converge: " << o.doc.value("diagnostic", std::string()) << "\n";
        return o.code;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::validation;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::not_converged;
    } catch (const NotConverged& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::not_converged;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::internal;
    }
}

} // namespace hcov
