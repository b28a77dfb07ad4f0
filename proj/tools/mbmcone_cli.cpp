// Command line surface over the MBM-class library: orbit enumeration, class
// classification, wall scans of the rank-2 positive cone, and the
// Bayer-Macri/Yoshioka cross-check. All output is machine readable (JSON
// records with schema_version "1", or CSV where noted) and deterministic.
//
// Exit codes: 0 success, 1 domain error (invalid input), 2 internal
// consistency failure (a bound the theory guarantees was violated, or the
// two wall descriptions disagree).

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mbmcone/serialize.hpp"

namespace {

using namespace mbmcone;

mpq_class parse_slope(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return make_rat(std::stoll(text), 1);
        return make_rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {  // stoll failures
        throw std::invalid_argument("cannot parse rational slope: " + text);
    }
}

PicClass parse_probe(const std::string& text, long long d, const Family& family) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("probe must be given as f,c");
    try {
        return PicClass{std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1)),
                        d, family};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("cannot parse probe coordinates: " + text);
    }
}

struct CommonArgs {
    std::string type;
    long long n = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--type", type, "family kind: k3 or kummer")->required();
        cmd->add_option("--n", n, "half the complex dimension (n >= 2)")->required();
    }
    Family family() const { return Family(family_kind_from_string(type), n); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of MBM classes and nef-cone walls for "
                 "K3^[n]- and Kummer-type holomorphic symplectic manifolds"};
    app.require_subcommand(1);

    CommonArgs enum_args;
    std::string enum_format = "json";
    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "list all monodromy orbits of MBM classes");
    enum_args.attach(cmd_enumerate);
    cmd_enumerate->add_option("--format", enum_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CommonArgs classify_args;
    long long classify_f = 0, classify_c = 0, classify_d = 0;
    CLI::App* cmd_classify =
        app.add_subcommand("classify", "decide whether f*x + c*e is an MBM class");
    classify_args.attach(cmd_classify);
    cmd_classify->add_option("--f", classify_f, "coefficient of x")->required();
    cmd_classify->add_option("--c", classify_c, "coefficient of e")->required();
    cmd_classify->add_option("--d", classify_d, "half-square of x, i.e. q(x) = 2d")->required();

    CommonArgs walls_args;
    long long walls_d = 0, walls_bound = 0;
    std::string walls_lo, walls_hi, walls_probe, walls_format = "json";
    CLI::App* cmd_walls =
        app.add_subcommand("walls", "scan MBM wall rays of the rank-2 positive cone");
    walls_args.attach(cmd_walls);
    cmd_walls->add_option("--d", walls_d, "half-square of x, i.e. q(x) = 2d")->required();
    cmd_walls->add_option("--bound", walls_bound, "cap on |f|, |c| of wall sources")->required();
    cmd_walls->add_option("--slope-lo", walls_lo, "lower ray-slope bound, as num/den");
    cmd_walls->add_option("--slope-hi", walls_hi, "upper ray-slope bound, as num/den");
    cmd_walls->add_option("--probe", walls_probe, "positive class f,c to locate among the walls");
    cmd_walls->add_option("--format", walls_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CommonArgs bm_args;
    long long bm_u = 0, bm_s = 0, bm_kappa = 0;
    CLI::App* cmd_bm = app.add_subcommand(
        "bm-check", "compare the Mukai-vector wall scan against the enumerated orbits");
    bm_args.attach(cmd_bm);
    cmd_bm->add_option("--u", bm_u, "bound on |u|")->required();
    cmd_bm->add_option("--s", bm_s, "bound on |s|")->required();
    cmd_bm->add_option("--kappa", bm_kappa, "bound on |kappa_sq|")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (cmd_enumerate->parsed()) {
            const Family family = enum_args.family();
            if (enum_format == "csv")
                std::cout << orbits_csv(enumerate_mbm_orbits(family), family);
            else
                std::cout << dump_record(
                    make_record("enumerate", family, enumerate_payload(family)));
        } else if (cmd_classify->parsed()) {
            const Family family = classify_args.family();
            const PicClass input{classify_f, classify_c, classify_d, family};
            std::cout << dump_record(make_record("classify", family, classify_payload(input)));
        } else if (cmd_walls->parsed()) {
            const Family family = walls_args.family();
            ScanWindow window;
            window.coeff_bound = walls_bound;
            if (!walls_lo.empty())
                window.slope_lo = parse_slope(walls_lo);
            if (!walls_hi.empty())
                window.slope_hi = parse_slope(walls_hi);
            std::optional<PicClass> probe;
            if (!walls_probe.empty())
                probe = parse_probe(walls_probe, walls_d, family);
            if (walls_format == "csv") {
                if (probe)
                    throw std::invalid_argument("--probe requires JSON output");
                std::cout << walls_csv(scan_walls(family, walls_d, window));
            } else {
                std::cout << dump_record(
                    make_record("walls", family, walls_payload(family, walls_d, window, probe)));
            }
        } else if (cmd_bm->parsed()) {
            const Family family = bm_args.family();
            if (bm_u < 1 || bm_s < 1 || bm_kappa < 1)
                throw std::invalid_argument("bm-check bounds must be positive");
            bool match = false;
            const json payload =
                bm_check_payload(family, MukaiScanBounds{bm_u, bm_s, bm_kappa}, match);
            std::cout << dump_record(make_record("bm-check", family, payload));
            return match ? 0 : 2;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
