// verlinde: query principal SL2 restrictions / Ver_p images, enumerate
// bracket-closed subalgebras, and run the verification suites.

#include "verlinde/bracket.hpp"
#include "verlinde/fusion_sl2.hpp"
#include "verlinde/gfusion.hpp"
#include "verlinde/labels.hpp"
#include "verlinde/principal.hpp"
#include "verlinde/reports.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>

namespace {

using namespace verlinde;

// "--type G2" or "--type G --rank 2"; the rank flag wins only when the type
// string has no digits of its own.
RootDatum datum_from(std::string type, int rank) {
    if (type.empty()) throw std::invalid_argument("--type is required");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
    if (type.size() > 1) {
        for (std::size_t i = 1; i < type.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(type[i])))
                throw std::invalid_argument("bad type '" + type + "'");
        rank = std::stoi(type.substr(1));
    }
    if (rank <= 0)
        throw std::invalid_argument("type '" + type + "' needs --rank");
    return RootDatum::build(letter, rank);
}

void write_or_print(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << payload;
}

struct ImageArgs {
    std::string type;
    int rank = 0;
    std::string weight;
    long long p = 0;
    std::string labels = "bourbaki";
    std::string json_path;
};

int cmd_image(const ImageArgs& args) {
    const RootDatum datum = datum_from(args.type, args.rank);

    LabelConvention conv =
        args.labels == "paper" ? LabelConvention::paper : LabelConvention::bourbaki;
    std::string text = args.weight;
    if (text.rfind("paper:", 0) == 0) {
        conv = LabelConvention::paper;
        text = text.substr(6);
    } else if (text.rfind("bourbaki:", 0) == 0) {
        conv = LabelConvention::bourbaki;
        text = text.substr(9);
    }
    const Weight lambda = parse_weight(datum, text, conv);

    if (!is_prime(args.p) || args.p <= datum.coxeter_number()) {
        std::cerr << "error: p must be a prime above the Coxeter number "
                  << datum.coxeter_number() << " of " << datum.name() << "\n";
        return 2;
    }
    if (!in_alcove(datum, lambda, args.p)) {
        std::cerr << "error: weight " << weight_to_string(lambda)
                  << " (bourbaki) is outside the fundamental alcove for p = " << args.p
                  << "; its Weyl and simple modules differ, so the image is not defined by "
                     "this query\n";
        return 2;
    }

    const StringMultiset strings = restriction_strings(datum, lambda);
    const VerpObject image = verp_image(strings, args.p);

    std::vector<long long> weyl;
    for (const auto& [m, c] : strings)
        for (Int i = 0; i < c; ++i) weyl.push_back(m);

    if (!args.json_path.empty()) {
        nlohmann::ordered_json doc;
        doc["weyl"] = weyl;
        nlohmann::ordered_json img = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < image.mult.size(); ++c)
            if (image.mult[c] != 0) img[std::to_string(c)] = std::stoll(image.mult[c].str());
        doc["image"] = std::move(img);
        write_or_print(args.json_path, doc.dump(2) + "\n");
        return 0;
    }

    std::cout << datum.name() << "  weight " << weight_to_string(lambda) << " (bourbaki)  p = "
              << args.p << "\n";
    std::cout << "weyl = [";
    for (std::size_t i = 0; i < weyl.size(); ++i)
        std::cout << (i ? ", " : "") << weyl[i];
    std::cout << "]\n";
    std::cout << "image = " << image.to_string() << "\n";
    return 0;
}

struct SubalgebraArgs {
    int n = 0;
    long long p = 0;
    bool sweep = false;
    long long p_max = 101;
    int threads = 0;
};

std::string describe_masks(const SubalgebraContext& ctx) {
    std::string out;
    for (Mask m : ctx.enumerate()) {
        out += "  " + mask_to_string(m) + " : ";
        const std::vector<char> letters = classify_mask(m, ctx.n(), ctx.p());
        if (letters.empty()) out += "?";
        for (std::size_t i = 0; i < letters.size(); ++i)
            out += std::string(i ? "," : "") + letters[i];
        out += "\n";
    }
    return out;
}

int cmd_subalgebras(const SubalgebraArgs& args) {
    if (args.sweep) {
        struct Cell {
            long long p;
            int n;
        };
        std::vector<Cell> cells;
        for (long long p = 5; p <= args.p_max; ++p) {
            if (!is_prime(p)) continue;
            for (int n = 2; 2 * n < p; ++n) cells.push_back({p, n});
        }
        std::vector<std::string> lines(cells.size());
        std::vector<char> bad(cells.size(), 0);
        parallel_for(cells.size(), args.threads, [&](std::size_t i) {
            const SubalgebraContext ctx(cells[i].n, cells[i].p);
            std::vector<Mask> got = ctx.enumerate();
            const std::vector<Mask> want = expected_family_masks(cells[i].n, cells[i].p);
            bool ok = got == want;
            std::string note;
            if (cells[i].n <= 16 && !(ctx.enumerate_exhaustive() == got)) {
                ok = false;
                note = " closure/exhaustive mismatch";
            }
            bad[i] = ok ? 0 : 1;
            lines[i] = "p=" + std::to_string(cells[i].p) + " n=" + std::to_string(cells[i].n) +
                       ": " + std::to_string(got.size()) + " closed" +
                       (ok ? "" : " DEVIATES" + note);
        });
        long long deviations = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::cout << lines[i] << "\n";
            deviations += bad[i];
        }
        if (deviations == 0) {
            std::cout << "all " << cells.size() << " cells conform\n";
            return 0;
        }
        std::cout << deviations << " cell(s) deviate\n";
        return 1;
    }

    if (args.n < 2 || !is_prime(args.p)) {
        std::cerr << "error: need --n >= 2 and a prime --p (or --sweep)\n";
        return 2;
    }
    const SubalgebraContext ctx(args.n, args.p);
    if (ctx.n() != ctx.requested_n())
        std::cout << "n=" << ctx.requested_n() << " reduces to n=" << ctx.n() << " (p-n)\n";
    std::cout << "bracket-closed subsets containing 1, sl(L_" << ctx.n() - 1 << ") in Ver_"
              << ctx.p() << ":\n"
              << describe_masks(ctx);
    std::vector<Mask> got = ctx.enumerate();
    const std::vector<Mask> want = expected_family_masks(ctx.n(), ctx.p());
    std::cout << got.size() << " subalgebra(s)\n";
    if (got != want) {
        std::cout << "DEVIATES from the classification families\n";
        return 1;
    }
    if (ctx.n() <= 16 && !(ctx.enumerate_exhaustive() == got)) {
        std::cout << "closure enumeration disagrees with the exhaustive scan\n";
        return 1;
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::string json_path;
    int threads = 0;
    std::string labels = "bourbaki";
    long long p_max = 0;
};

int cmd_verify(const VerifyArgs& args) {
    SuiteOptions options;
    options.threads = args.threads;
    options.labels = args.labels == "paper" ? LabelConvention::paper : LabelConvention::bourbaki;
    options.p_max = args.p_max;
    const VerificationReport report = run_suite(args.suite, options);
    if (!args.json_path.empty()) write_or_print(args.json_path, report_to_json(report));
    if (args.json_path != "-") std::cout << report_to_text(report);
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verlinde-category toolkit: principal SL2 restrictions, Ver_p images, "
                 "bracket-closed subalgebras, verification suites"};
    app.set_version_flag("--version", verlinde::toolkit_version);
    app.require_subcommand(1);

    ImageArgs image_args;
    CLI::App* image = app.add_subcommand(
        "image", "Weyl strings and Ver_p image of an alcove weight");
    image->add_option("--type", image_args.type, "simple type, e.g. G2 or A (with --rank)")
        ->required();
    image->add_option("--rank", image_args.rank, "rank when --type is a bare letter");
    image->add_option("--weight", image_args.weight,
                      "fundamental-weight combination, e.g. w1, 3w2+w4, adjoint, paper:w1")
        ->required();
    image->add_option("--p", image_args.p, "prime, must exceed the Coxeter number")->required();
    image->add_option("--labels", image_args.labels, "node numbering for weight input")
        ->check(CLI::IsMember({"bourbaki", "paper"}));
    image->add_option("--json", image_args.json_path, "write {weyl, image} JSON here ('-' = stdout)");

    SubalgebraArgs sub_args;
    CLI::App* sub = app.add_subcommand(
        "subalgebras", "bracket-closed subsets of L_2+L_4+...+L_{2n-2} in Ver_p");
    sub->add_option("--n", sub_args.n, "n for sl(L_{n-1})");
    sub->add_option("--p", sub_args.p, "prime p > 2n");
    sub->add_flag("--sweep", sub_args.sweep, "check every (p, n) cell up to --p-max");
    sub->add_option("--p-max", sub_args.p_max, "sweep prime bound (default 101)");
    sub->add_option("--threads", sub_args.threads, "sweep worker threads (0 = auto)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", verify_args.suite,
                       "tables | typeD | invertibles | minuscule | thm-main | equivalences | "
                       "dims | all");
    verify->add_option("--json", verify_args.json_path, "write the report here ('-' = stdout)");
    verify->add_option("--threads", verify_args.threads, "worker threads (0 = auto)");
    verify->add_option("--labels", verify_args.labels, "node numbering used in witnesses")
        ->check(CLI::IsMember({"bourbaki", "paper"}));
    verify->add_option("--p-max", verify_args.p_max, "override the prime sweep bound (typeD)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (image->parsed()) return cmd_image(image_args);
        if (sub->parsed()) return cmd_subalgebras(sub_args);
        if (verify->parsed()) return cmd_verify(verify_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
