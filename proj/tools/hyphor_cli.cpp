#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyphor/balls.hpp"
#include "hyphor/optimize.hpp"
#include "hyphor/orthoscheme.hpp"
#include "hyphor/packing2d.hpp"
#include "hyphor/packing3d.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Round-trips a double through 12 significant digits so JSON output is
// byte-stable across platforms.
double snap(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return std::strtod(buf, nullptr);
}

// Accepts "5", "5,6,7" or "5..9".
std::vector<double> parse_p_list(const std::string& text) {
    std::vector<double> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const double lo = std::stod(text.substr(0, dots));
        const double hi = std::stod(text.substr(dots + 2));
        for (double p = lo; p <= hi + 1e-9; p += 1.0) out.push_back(p);
    } else {
        size_t pos = 0;
        while (pos < text.size()) {
            size_t used = 0;
            out.push_back(std::stod(text.substr(pos), &used));
            pos += used;
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
    }
    if (out.empty()) throw std::invalid_argument("empty parameter list");
    std::sort(out.begin(), out.end());
    return out;
}

int run_table(const std::string& family, const std::string& plist) {
    hyphor::DensityResult (*opt)(double) = nullptr;
    if (family == "4,4") opt = hyphor::optimize_family_44;
    else if (family == "6,3") opt = hyphor::optimize_family_63;
    else if (family == "3,6") opt = hyphor::optimize_family_36;
    else throw std::invalid_argument("unknown family: " + family +
                                     " (expected 4,4 or 6,3 or 3,6)");
    std::string body;
    for (double p : parse_p_list(plist)) {
        const hyphor::DensityResult r = opt(p);
        body += fmt(r.p) + "," + fmt(r.vol_F) + "," + fmt(r.vol_pieces) + "," +
                fmt(r.delta) + "," + (r.realizable_tiling ? "true" : "false") + "\n";
    }
    std::fputs("p,vol_F,vol_pieces,delta,realizable\n", stdout);
    std::fputs(body.c_str(), stdout);
    return 0;
}

int run_curve(const std::string& kind, double from, double to, double step) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<double> xs;
    for (double x = from; x <= to + step * 1e-9; x += step) xs.push_back(x);

    if (kind == "2d-type1" || kind == "2d-type2" || kind == "2d-horo") {
        std::string body;
        for (double a : xs) {
            double d = 0;
            if (kind == "2d-type1") d = hyphor::density_type1(a);
            else if (kind == "2d-type2") d = hyphor::density_type2(a);
            else d = hyphor::density_horocycle_only(a);
            body += fmt(a) + "," + fmt(d) + "\n";
        }
        std::fputs("a,delta\n", stdout);
        std::fputs(body.c_str(), stdout);
        return 0;
    }
    if (kind == "2d-surface") {
        std::string body;
        for (double a : xs) {
            const double lo = std::max(1.0 - 2.0 * a * a, 0.0);
            const double hi = std::sqrt(1.0 - a * a);
            const size_t n = xs.size() > 1 ? xs.size() : 2;
            for (size_t j = 0; j < n; ++j) {
                const double y = lo + (hi - lo) * double(j) / double(n - 1);
                body += fmt(a) + "," + fmt(y) + "," +
                        fmt(hyphor::density_general(a, y)) + "\n";
            }
        }
        std::fputs("a,y,delta\n", stdout);
        std::fputs(body.c_str(), stdout);
        return 0;
    }
    if (kind == "3d-36") {
        std::string body;
        for (double p : xs)
            body += fmt(p) + "," + fmt(hyphor::optimize_family_36(p).delta) + "\n";
        std::fputs("p,delta\n", stdout);
        std::fputs(body.c_str(), stdout);
        return 0;
    }
    (void)inv_sqrt2;
    throw std::invalid_argument("unknown curve kind: " + kind);
}

int run_popt() {
    const hyphor::POptResult r = hyphor::find_p_opt();
    json j;
    j["p_interval"] = {snap(r.p_lo), snap(r.p_hi)};
    j["delta_max"] = snap(r.delta_max);
    j["exceeds_bf_bound"] = r.exceeds_bf_bound;
    std::fputs(j.dump(2).c_str(), stdout);
    std::fputc('\n', stdout);
    return 0;
}

int run_validate(double p, double q, double r, double* s_opt, double* h_opt) {
    const hyphor::FrustumOrthoscheme f =
        hyphor::realize(hyphor::build_scheme(p, q, r));
    const double s = s_opt ? *s_opt : hyphor::horo_param_through(f.A1);
    const double h = h_opt ? *h_opt : hyphor::distance(f.P2, f.A2);
    const hyphor::AdmissibilityReport rep = hyphor::check_admissibility(f, s, h);
    json j;
    j["p"] = snap(p);
    j["q"] = snap(q);
    j["r"] = snap(r);
    j["s"] = snap(s);
    j["h"] = snap(h);
    j["horoball_ok"] = rep.horoball_ok;
    j["hyperball_ok"] = rep.hyperball_ok;
    j["disjoint"] = rep.disjoint;
    j["admissible"] = rep.all();
    j["min_clearances"] = {snap(rep.min_clearances[0]), snap(rep.min_clearances[1]),
                           snap(rep.min_clearances[2])};
    std::fputs(j.dump(2).c_str(), stdout);
    std::fputc('\n', stdout);
    return 0;
}

int run_volume(double p, double q, double r) {
    const double v = hyphor::volume_3d(hyphor::build_scheme(p, q, r));
    json j;
    j["p"] = snap(p);
    j["q"] = snap(q);
    j["r"] = snap(r);
    j["volume"] = snap(v);
    std::fputs(j.dump(2).c_str(), stdout);
    std::fputc('\n', stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Densities of horoball+hyperball packings generated by "
                 "frustum orthoschemes"};
    app.require_subcommand(1);

    std::string family, plist;
    auto* table = app.add_subcommand(
        "table", "Per-family optimal densities for a list of parameters p");
    table->add_option("--family", family, "Family q,r: one of 4,4 6,3 3,6")
        ->required();
    table->add_option("--p", plist, "Parameter list: e.g. 7 or 5,6,7 or 7..12")
        ->required();

    std::string kind;
    double from = 0, to = 0, step = 0;
    auto* curve = app.add_subcommand("curve", "Density curves as CSV");
    curve->add_option("--kind", kind,
                      "One of: 2d-type1 2d-type2 2d-horo 2d-surface 3d-36")
        ->required();
    curve->add_option("--from", from, "Range start")->required();
    curve->add_option("--to", to, "Range end")->required();
    curve->add_option("--step", step, "Range step (> 0)")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* popt = app.add_subcommand(
        "popt", "Real-parameter density optimum of the 3,6 family (JSON)");

    double p = 0, q = 0, r = 0, s = 0, h = 0;
    auto* validate = app.add_subcommand(
        "validate", "Admissibility report for a ball pair (JSON)");
    // --h would collide with the automatic -h help alias.
    validate->set_help_flag("--help", "Print this help message and exit");
    validate->add_option("--p", p, "Scheme parameter p")->required();
    validate->add_option("--q", q, "Scheme parameter q")->required();
    validate->add_option("--r", r, "Scheme parameter r")->required();
    auto* s_opt = validate->add_option("--s", s, "Horoball parameter (default: maximal)");
    auto* h_opt = validate->add_option("--h", h, "Hyperball height (default: maximal)");

    double vp = 0, vq = 0, vr = 0;
    auto* volume = app.add_subcommand("volume", "Frustum volume (JSON)");
    volume->add_option("--p", vp, "Scheme parameter p")->required();
    volume->add_option("--q", vq, "Scheme parameter q")->required();
    volume->add_option("--r", vr, "Scheme parameter r")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) return run_table(family, plist);
        if (curve->parsed()) return run_curve(kind, from, to, step);
        if (popt->parsed()) return run_popt();
        if (validate->parsed())
            return run_validate(p, q, r, s_opt->count() ? &s : nullptr,
                                h_opt->count() ? &h : nullptr);
        if (volume->parsed()) return run_volume(vp, vq, vr);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
