// Command-line front end. `run` is kept separate from main() so tests can
// drive it in-process.
#pragma once

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "utccs/utccs.hpp"

namespace utccs::cli {

/// A map chosen by name, still missing its parameter r.
struct MapFamily {
    std::variant<SeedMapKind, std::pair<Coupling, UtfKind>> which;

    std::variant<SeedMap, MapSpec> at(double r) const {
        if (const auto* k = std::get_if<SeedMapKind>(&which)) return SeedMap{*k, r};
        const auto& [c, utf] = std::get<std::pair<Coupling, UtfKind>>(which);
        return make_coupling(c, utf, r);
    }
};

/// logistic|tent|sine, lscm1..3 (zig-zag types), or coupling:utf such as lscm:sinepi.
inline MapFamily parse_map_family(const std::string& name) {
    for (auto k : {SeedMapKind::Logistic, SeedMapKind::Tent, SeedMapKind::Sine}) {
        if (name == to_string(k)) return {k};
    }
    auto coupling_of = [&](const std::string& s) {
        for (auto c : kAllCouplings) {
            if (s == to_string(c)) return c;
        }
        throw std::invalid_argument("unknown map '" + name + "'");
    };
    if (const auto colon = name.find(':'); colon != std::string::npos) {
        const auto c = coupling_of(name.substr(0, colon));
        const auto utf_name = name.substr(colon + 1);
        for (auto u : kAllUtfKinds) {
            if (utf_name == to_string(u)) return {std::pair{c, u}};
        }
        throw std::invalid_argument("unknown transform '" + utf_name + "'");
    }
    if (name.size() == 5 && name[4] >= '1' && name[4] <= '3') {
        return {std::pair{coupling_of(name.substr(0, 4)), utf_for_type(name[4] - '0')}};
    }
    throw std::invalid_argument("unknown map '" + name + "'");
}

inline CbprngMap parse_generator(const std::string& name) {
    if (name == "lscm") return CbprngMap::LscmLcg;
    if (name == "tlcm") return CbprngMap::TlcmLcg;
    if (name == "stcm") return CbprngMap::StcmLcg;
    throw std::invalid_argument("unknown generator map '" + name + "' (lscm, tlcm, stcm)");
}

/// Binds a flag parsed with parse_decimal instead of the locale-aware default.
inline CLI::Option* add_decimal(CLI::App* app, const std::string& flag, double& target,
                                const std::string& help) {
    return app
        ->add_option_function<std::string>(
            flag,
            [&target, flag](const std::string& text) {
                try {
                    target = parse_decimal(text);
                } catch (const std::invalid_argument& e) {
                    throw CLI::ValidationError(flag, e.what());
                }
            },
            help)
        ->type_name("FLOAT");
}

/// Writes to `path`, or to `fallback` when the path is empty or "-".
inline void with_output(const std::string& path, std::ostream& fallback,
                        const std::function<void(std::ostream&)>& body, bool binary = false) {
    if (path.empty() || path == "-") {
        body(fallback);
        return;
    }
    std::ofstream f(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    body(f);
    f.flush();
    if (!f) throw std::runtime_error("write to " + path + " failed");
}

struct KeyFlags {
    std::string file;
    bool demo = false;
    KeySet values;
    std::vector<std::pair<CLI::App*, std::vector<CLI::Option*>>> per_command;

    void attach(CLI::App* app) {
        std::vector<CLI::Option*> individual;
        auto* f = app->add_option("--keys", file, "key file: x1 r1 x2 r2 x3 r3, one per line");
        auto* d = app->add_flag("--demo-keys", demo, "use the built-in demonstration keys");
        for (auto k : kAllKeyNames) {
            const std::string flag = "--" + std::string(to_string(k));
            individual.push_back(add_decimal(app, flag, values[k], "secret key " + std::string(to_string(k))));
        }
        f->excludes(d);
        for (auto* o : individual) {
            o->excludes(f);
            o->excludes(d);
        }
        per_command.emplace_back(app, std::move(individual));
    }

    KeySet resolve() const {
        if (!file.empty()) return read_key_file(file);
        if (demo) return demo_keys();
        std::size_t given = 0;
        for (const auto& [app, opts] : per_command) {
            if (!app->parsed()) continue;
            for (auto* o : opts) given += o->count() > 0;
        }
        if (given != std::size(kAllKeyNames)) {
            throw std::invalid_argument("give all six keys (--x1 .. --r3), --keys FILE or --demo-keys");
        }
        values.validate();
        return values;
    }
};

inline BitReversal parse_bitrev(const std::string& s) {
    if (s == "minimal") return BitReversal::Minimal;
    if (s == "fixed8") return BitReversal::Fixed8;
    throw std::invalid_argument("--bitrev must be minimal or fixed8");
}

struct LoadedImage {
    ImageBuffer pixels;  // colour is stacked R, G, B
    bool color = false;
};

inline LoadedImage load_image(const std::string& path) {
    const PnmImage img = read_pnm(path);
    return {as_cipher_input(img), std::holds_alternative<ColorChannels>(img)};
}

/// The planes audited separately: one for grayscale, R/G/B for colour.
inline std::vector<std::pair<std::string, ImageBuffer>> audit_planes(const ImageBuffer& img, bool color) {
    if (!color) return {{"gray", img}};
    const auto ch = split_color(img);
    return {{"red", ch[0]}, {"green", ch[1]}, {"blue", ch[2]}};
}

inline std::ofstream open_csv(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    const auto path = (std::filesystem::path(dir) / (name + ".csv")).string();
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    return f;
}

struct AuditOptions {
    std::string input;
    std::string csv_dir;
    std::string report;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    std::size_t pairs = 5000;
    std::string key_name = "all";
    int emin = 40;
    int emax = 60;
    std::vector<double> fractions{0.25, 0.5};
    std::size_t row0 = 0;
    std::size_t col0 = 0;
};

inline void audit_chi2(const AuditOptions& o, const LoadedImage& img, const KeySet& k, std::ostream& out) {
    const ImageBuffer cipher = encrypt(img.pixels, k);
    out << "== Histogram chi-square uniformity (255 dof, critical " << format_double(kChi2Critical255At005)
        << " at alpha 0.05) ==\n";
    std::optional<std::ofstream> csv;
    if (!o.csv_dir.empty()) {
        csv = open_csv(o.csv_dir, "chi2");
        *csv << "channel,plain,cipher,critical,pass\n";
    }
    const auto plain_planes = audit_planes(img.pixels, img.color);
    const auto cipher_planes = audit_planes(cipher, img.color);
    for (std::size_t c = 0; c < cipher_planes.size(); ++c) {
        const auto p = chi2_uniformity(plain_planes[c].second);
        const auto r = chi2_uniformity(cipher_planes[c].second);
        out << cipher_planes[c].first << ": plain " << format_double(p.statistic) << ", cipher "
            << format_double(r.statistic) << (r.pass ? "  PASS" : "  FAIL") << (r.low_count ? "  (fewer than 256 pixels)" : "")
            << '\n';
        if (csv) {
            *csv << cipher_planes[c].first << ',' << format_double(p.statistic) << ',' << format_double(r.statistic)
                 << ',' << format_double(r.critical_0_05) << ',' << (r.pass ? 1 : 0) << '\n';
        }
    }
}

inline void audit_diff(const AuditOptions& o, const LoadedImage& img, const KeySet& k, std::ostream& out) {
    const auto r = diff_attack_trial(img.pixels, k, o.trials, o.seed);
    out << "== NPCR / UACI under one-bit plaintext changes (" << r.trials << " trials, seed " << o.seed
        << ") ==\n";
    if (img.color) out << "(colour: values over the stacked R,G,B cipher, i.e. the channel mean)\n";
    out << "NPCR mean " << format_double(r.npcr) << "%\n";
    for (const auto& c : kNpcrUaciCritical) {
        out << "  alpha " << format_double(c.alpha) << ": NPCR* " << format_double(c.npcr_min) << "%  "
            << (r.npcr_pass(c.alpha) ? "PASS" : "FAIL") << '\n';
    }
    out << "UACI mean " << format_double(r.uaci) << "%\n";
    for (const auto& c : kNpcrUaciCritical) {
        out << "  alpha " << format_double(c.alpha) << ": UACI* [" << format_double(c.uaci_lo) << ", "
            << format_double(c.uaci_hi) << "]%  " << (r.uaci_pass(c.alpha) ? "PASS" : "FAIL") << '\n';
    }
    if (!o.csv_dir.empty()) {
        auto csv = open_csv(o.csv_dir, "diff");
        csv << "trial,npcr,uaci\n";
        for (std::size_t t = 0; t < r.trials; ++t) {
            csv << t + 1 << ',' << format_double(r.npcr_per_trial[t]) << ',' << format_double(r.uaci_per_trial[t])
                << '\n';
        }
    }
}

inline void audit_corr(const AuditOptions& o, const LoadedImage& img, const KeySet& k, std::ostream& out) {
    const ImageBuffer cipher = encrypt(img.pixels, k);
    out << "== Adjacent-pixel correlation coefficients (" << o.pairs << " pairs, seed " << o.seed << ") ==\n";
    std::optional<std::ofstream> csv;
    if (!o.csv_dir.empty()) {
        csv = open_csv(o.csv_dir, "corr");
        *csv << "channel,direction,plain,cipher\n";
    }
    const auto plain_planes = audit_planes(img.pixels, img.color);
    const auto cipher_planes = audit_planes(cipher, img.color);
    for (std::size_t c = 0; c < cipher_planes.size(); ++c) {
        for (auto d : kAllDirections) {
            std::string plain_cc;
            try {
                plain_cc = format_double(correlation(plain_planes[c].second, d, o.pairs, o.seed).cc);
            } catch (const UndefinedCorrelation&) {
                plain_cc = "nan";
            }
            const double cc = correlation(cipher_planes[c].second, d, o.pairs, o.seed).cc;
            out << cipher_planes[c].first << ' ' << to_string(d) << ": plain " << plain_cc << ", cipher "
                << format_double(cc) << '\n';
            if (csv) *csv << cipher_planes[c].first << ',' << to_string(d) << ',' << plain_cc << ',' << format_double(cc) << '\n';
        }
    }
}

inline void audit_keysens(const AuditOptions& o, const LoadedImage& img, const KeySet& k, std::ostream& out) {
    std::vector<KeyName> names;
    if (o.key_name == "all") {
        names.assign(std::begin(kAllKeyNames), std::end(kAllKeyNames));
    } else {
        names.push_back(parse_key_name(o.key_name));
    }
    out << "== Key sensitivity: MSE after decrypting with one key raised by 2^-e (e in [" << o.emin << ", "
        << o.emax << "], wrong-key floor MSE >= " << format_double(kKeySensitivityNoiseFloor) << ") ==\n";
    std::optional<std::ofstream> csv;
    if (!o.csv_dir.empty()) {
        csv = open_csv(o.csv_dir, "keysens");
        *csv << "key,exponent,alpha,mse,skipped\n";
    }
    for (auto name : names) {
        const auto curve = key_sensitivity(img.pixels, k, name, o.emin, o.emax);
        const auto t = curve.threshold_exponent();
        out << to_string(name) << ": threshold " << (t ? "2^-" + std::to_string(*t) : std::string("none")) << '\n';
        if (csv) {
            for (const auto& p : curve.points) {
                *csv << to_string(name) << ',' << p.exponent << ',' << format_double(p.alpha) << ','
                     << format_double(p.mse) << ',' << (p.skipped ? 1 : 0) << '\n';
            }
        }
    }
}

inline void audit_dataloss(const AuditOptions& o, const LoadedImage& img, const KeySet& k, std::ostream& out) {
    out << "== Data loss: zeroed cipher rectangle, decrypted with the correct keys ==\n";
    std::optional<std::ofstream> csv;
    if (!o.csv_dir.empty()) {
        csv = open_csv(o.csv_dir, "dataloss");
        *csv << "fraction,row0,col0,rows,cols,mse\n";
    }
    for (double f : o.fractions) {
        const auto r = data_loss(img.pixels, k, f, o.row0, o.col0);
        out << "loss " << format_double(f) << ": region " << r.region.rows << 'x' << r.region.cols << " at ("
            << r.region.row0 << ',' << r.region.col0 << "), MSE " << format_double(r.mse) << '\n';
        if (csv) {
            *csv << format_double(f) << ',' << r.region.row0 << ',' << r.region.col0 << ',' << r.region.rows << ','
                 << r.region.cols << ',' << format_double(r.mse) << '\n';
        }
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Unit-transform coupled chaotic maps, CBPRNG and image cipher"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // map
    auto* map_cmd = app.add_subcommand("map", "iterate a single map");
    map_cmd->require_subcommand(1);
    std::string map_name = "lscm3";
    double r = 0.5, x0 = 0.1;
    std::size_t length = 100, discard = 0;
    std::string out_path;

    auto* map_step = map_cmd->add_subcommand("step", "print F(x) for one state");
    map_step->add_option("--map", map_name, "map name")->required();
    add_decimal(map_step, "--r", r, "control parameter in [0,1]")->required();
    add_decimal(map_step, "--x", x0, "state in [0,1]")->required();

    auto* map_orbit = map_cmd->add_subcommand("orbit", "write an orbit as CSV (i,x)");
    map_orbit->add_option("--map", map_name, "map name")->required();
    add_decimal(map_orbit, "--r", r, "control parameter in [0,1]")->required();
    add_decimal(map_orbit, "--x0", x0, "initial state in (0,1)");
    map_orbit->add_option("--length", length, "states to record")->check(CLI::PositiveNumber);
    map_orbit->add_option("--discard", discard, "transient iterates to drop");
    map_orbit->add_option("--out", out_path, "output CSV (default stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "chaos metrics as CSV");
    analyze->require_subcommand(1);
    std::size_t grid = 101, iterations = kDefaultLeIterations, le_discard = kDefaultLeDiscard;
    std::size_t bif_grid = 500, bif_discard = 500, keep = 200, steps = 50, se_length = kDefaultSeLength;

    auto* an_le = analyze->add_subcommand("le", "Lyapunov exponent over an r grid (r,lambda)");
    an_le->add_option("--map", map_name, "map name")->required();
    an_le->add_option("--r-grid", grid, "grid points over [0,1]")->check(CLI::PositiveNumber);
    an_le->add_option("--iterations", iterations, "iterations per point")->check(CLI::Range(1000, 100'000'000));
    an_le->add_option("--discard", le_discard, "transient iterates");
    add_decimal(an_le, "--x0", x0, "initial state in (0,1)");
    an_le->add_option("--out", out_path, "output CSV (default stdout)");

    auto* an_bif = analyze->add_subcommand("bifurcation", "bifurcation samples (r,x)");
    an_bif->add_option("--map", map_name, "map name")->required();
    an_bif->add_option("--r-grid", bif_grid, "grid points over [0,1]")->check(CLI::PositiveNumber);
    an_bif->add_option("--discard", bif_discard, "transient iterates");
    an_bif->add_option("--keep", keep, "samples kept per r")->check(CLI::PositiveNumber);
    add_decimal(an_bif, "--x0", x0, "initial state in (0,1)");
    an_bif->add_option("--out", out_path, "output CSV (default stdout)");

    auto* an_cob = analyze->add_subcommand("cobweb", "cobweb segments (x1,y1,x2,y2)");
    an_cob->add_option("--map", map_name, "map name")->required();
    add_decimal(an_cob, "--r", r, "control parameter in [0,1]")->required();
    add_decimal(an_cob, "--x0", x0, "initial state in [0,1]");
    an_cob->add_option("--steps", steps, "iterations traced")->check(CLI::PositiveNumber);
    an_cob->add_option("--out", out_path, "output CSV (default stdout)");

    auto* an_se = analyze->add_subcommand("se", "sample entropy over an r grid (r,se)");
    an_se->add_option("--map", map_name, "map name")->required();
    an_se->add_option("--r-grid", grid, "grid points over [0,1]")->check(CLI::PositiveNumber);
    an_se->add_option("--length", se_length, "series length")->check(CLI::Range(100, 1'000'000));
    add_decimal(an_se, "--x0", x0, "initial state in (0,1)");
    an_se->add_option("--out", out_path, "output CSV (default stdout)");

    // rng
    auto* rng = app.add_subcommand("rng", "raw CBPRNG bitstream, MSB-first");
    std::string gen_name = "lscm";
    std::optional<double> rng_x0, rng_r;
    double rng_x0_v = 0.0, rng_r_v = 0.0;
    std::uint64_t n_bits = 0;
    int word_bits = 32;
    rng->add_option("--map", gen_name, "lscm, tlcm or stcm")->check(CLI::IsMember({"lscm", "tlcm", "stcm"}));
    auto* rng_x0_opt = add_decimal(rng, "--x0", rng_x0_v, "initial state in (0,1)");
    auto* rng_r_opt = add_decimal(rng, "--r", rng_r_v, "control parameter in [0,1]");
    rng->add_option("--bits", n_bits, "bits to write (multiple of 8)")->required()->check(CLI::PositiveNumber);
    rng->add_option("--word-bits", word_bits, "word width k")->check(CLI::Range(1, 64));
    rng->add_option("--out", out_path, "output file")->required();

    // encrypt / decrypt
    std::string in_path, bitrev = "minimal";
    KeyFlags keys;
    auto* enc = app.add_subcommand("encrypt", "encrypt a PGM/PPM image");
    auto* dec = app.add_subcommand("decrypt", "decrypt a PGM/PPM image");
    for (auto* c : {enc, dec}) {
        c->add_option("--in", in_path, "input image")->required()->check(CLI::ExistingFile);
        c->add_option("--out", out_path, "output image")->required();
        c->add_option("--bitrev", bitrev, "diffusion bit reversal")->check(CLI::IsMember({"minimal", "fixed8"}));
        keys.attach(c);
    }

    // audit
    auto* audit = app.add_subcommand("audit", "security analysis of the cipher on one image");
    audit->require_subcommand(1);
    AuditOptions ao;
    std::vector<std::pair<std::string, CLI::App*>> audits;
    const std::pair<const char*, const char*> audit_cmds[] = {
        {"chi2", "histogram chi-square of the cipher"},
        {"diff", "NPCR/UACI under one-bit plaintext changes"},
        {"corr", "adjacent-pixel correlation, plain and cipher"},
        {"keysens", "decryption MSE under 2^-e key perturbations"},
        {"dataloss", "decryption after zeroing part of the cipher"},
        {"all", "every audit above"},
    };
    for (const auto& [name, about] : audit_cmds) {
        auto* a = audit->add_subcommand(name, about);
        a->add_option("--in", ao.input, "plain image")->required()->check(CLI::ExistingFile);
        a->add_option("--csv-dir", ao.csv_dir, "directory for CSV tables");
        a->add_option("--report", ao.report, "text summary file (default stdout)");
        a->add_option("--seed", ao.seed, "sampling seed");
        a->add_option("--trials", ao.trials, "one-bit-change trials")->check(CLI::PositiveNumber);
        a->add_option("--pairs", ao.pairs, "correlation pairs")->check(CLI::PositiveNumber);
        a->add_option("--key", ao.key_name, "key to perturb (x1..r3 or all)")
            ->check(CLI::IsMember({"all", "x1", "r1", "x2", "r2", "x3", "r3"}));
        a->add_option("--emin", ao.emin, "smallest exponent e of 2^-e")->check(CLI::Range(1, 1074));
        a->add_option("--emax", ao.emax, "largest exponent e of 2^-e")->check(CLI::Range(1, 1074));
        a->add_option("--fraction", ao.fractions, "lost fraction(s) of the cipher");
        a->add_option("--row0", ao.row0, "loss region top row");
        a->add_option("--col0", ao.col0, "loss region left column");
        keys.attach(a);
        audits.emplace_back(name, a);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (map_step->parsed()) {
            const auto m = parse_map_family(map_name).at(r);
            const double next = std::visit([&](const auto& mm) { return step(mm, x0); }, m);
            out << format_double(next) << '\n';
        } else if (map_orbit->parsed()) {
            const auto m = parse_map_family(map_name).at(r);
            const Orbit orbit = std::visit([&](const auto& mm) { return iterate_orbit(mm, x0, length, discard); }, m);
            with_output(out_path, out, [&](std::ostream& os) {
                os << "i,x\n";
                for (std::size_t i = 0; i < orbit.states.size(); ++i) os << i + 1 << ',' << format_double(orbit.states[i]) << '\n';
            });
        } else if (an_le->parsed()) {
            const auto fam = parse_map_family(map_name);
            const auto rs = unit_grid(grid);
            std::vector<double> lambdas;
            for (double rv : rs) {
                lambdas.push_back(std::visit(
                    [&](const auto& mm) { return lyapunov_exponent(mm, x0, iterations, le_discard).lambda; },
                    fam.at(rv)));
            }
            with_output(out_path, out, [&](std::ostream& os) { write_le_csv(os, rs, lambdas); });
        } else if (an_bif->parsed()) {
            const auto fam = parse_map_family(map_name);
            const auto rs = unit_grid(bif_grid);
            BifurcationSeries b;
            b.r_grid = rs;
            b.points_per_r = keep;
            b.x0 = x0;
            for (double rv : rs) {
                b.samples.push_back(std::visit(
                    [&](const auto& mm) { return iterate_orbit(mm, x0, keep, bif_discard).states; }, fam.at(rv)));
            }
            with_output(out_path, out, [&](std::ostream& os) { write_bifurcation_csv(os, b); });
        } else if (an_cob->parsed()) {
            const auto m = parse_map_family(map_name).at(r);
            const auto t = std::visit([&](const auto& mm) { return cobweb_data(mm, x0, steps); }, m);
            with_output(out_path, out, [&](std::ostream& os) { write_cobweb_csv(os, t); });
        } else if (an_se->parsed()) {
            const auto fam = parse_map_family(map_name);
            const auto rs = unit_grid(grid);
            std::vector<double> se;
            for (double rv : rs) {
                se.push_back(std::visit(
                    [&](const auto& mm) { return orbit_sample_entropy(mm, x0, se_length).value; }, fam.at(rv)));
            }
            with_output(out_path, out, [&](std::ostream& os) { write_se_csv(os, rs, se); });
        } else if (rng->parsed()) {
            const auto which = parse_generator(gen_name);
            const auto demo = demo_params(which);
            Cbprng gen(which, rng_x0_opt->count() ? rng_x0_v : demo.x0, rng_r_opt->count() ? rng_r_v : demo.r,
                       word_bits);
            with_output(out_path, out, [&](std::ostream& os) { emit_bitstream(gen, n_bits, os); }, true);
        } else if (enc->parsed() || dec->parsed()) {
            const KeySet k = keys.resolve();
            const auto img = load_image(in_path);
            const auto mode = parse_bitrev(bitrev);
            const ImageBuffer result = enc->parsed() ? encrypt(img.pixels, k, mode) : decrypt(img.pixels, k, mode);
            write_pnm(out_path, from_cipher_output(result, img.color));
        } else {
            for (const auto& [name, sub] : audits) {
                if (!sub->parsed()) continue;
                if (ao.emin > ao.emax) throw std::invalid_argument("--emin must not exceed --emax");
                const KeySet k = keys.resolve();
                const auto img = load_image(ao.input);
                with_output(ao.report, out, [&](std::ostream& os) {
                    os << "# image " << ao.input << " (" << img.pixels.rows() << 'x' << img.pixels.cols()
                       << (img.color ? ", colour stacked R,G,B" : "") << ")\n";
                    os << "# seed " << ao.seed << ", trials " << ao.trials << ", pairs " << ao.pairs << '\n';
                    const bool all = name == "all";
                    if (all || name == "chi2") audit_chi2(ao, img, k, os);
                    if (all || name == "diff") audit_diff(ao, img, k, os);
                    if (all || name == "corr") audit_corr(ao, img, k, os);
                    if (all || name == "keysens") audit_keysens(ao, img, k, os);
                    if (all || name == "dataloss") audit_dataloss(ao, img, k, os);
                });
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace utccs::cli
