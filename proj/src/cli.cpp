#include "efrac/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "efrac/digitvec.hpp"
#include "efrac/egyptian.hpp"
#include "efrac/errors.hpp"
#include "efrac/fractal.hpp"
#include "efrac/numeral.hpp"
#include "efrac/render.hpp"
#include "efrac/verify.hpp"

namespace efrac::cli {

namespace {

constexpr int kMinRenderWidth = 16;
constexpr int kMaxRenderWidth = 16384;

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << bytes;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw DomainError("cannot open '" + path + "' for writing");
    }
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!file) {
        throw DomainError("failed writing '" + path + "'");
    }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <int Base>
int print_check(const std::string& xs, const std::string& ys, std::ostream& out) {
    const auto x = DigitVec<Base>::parse(xs);
    const auto y = DigitVec<Base>::parse(ys);
    LinearityReport r;
    if constexpr (Base == 2) {
        r = check_linear_z2(x, y);
    } else {
        r = check_linear_z3(x, y);
    }
    out << "x: " << x.to_tuple_string() << "\n";
    out << "y: " << y.to_tuple_string() << "\n";
    out << "lhs: " << r.lhs << "\n";
    out << "rhs: " << r.rhs << "\n";
    out << "z: " << r.z.to_tuple_string() << "\n";
    out << "sigma_h_z: " << r.sigma_z << "\n";
    out << "linear: " << yes_no(r.linear) << "\n";
    return r.linear ? kExitOk : kExitFalse;
}

NumeralString binary_numeral(const BigInt& n) {
    if (n < 0) {
        throw DomainError("binary numerals need a nonnegative integer");
    }
    NumeralString s;
    s.base = 2;
    for (char c : n.get_str(2)) {
        s.integer_digits.push_back(static_cast<Digit>(c - '0'));
    }
    return s;
}

template <int Base>
void print_fraction(const Rational& value, std::size_t max_len, bool dual, std::ostream& out) {
    if (dual) {
        for (const auto& e : dual_representations<Base>(value)) {
            out << e.to_string() << "\n";
        }
        return;
    }
    out << format_numeral(fraction_numeral(value_to_digits<Base>(value, max_len))) << "\n";
}

struct Options {
    // efrac
    std::string value;
    std::string lhs, rhs;
    int base = 2;
    bool disjoint = false;
    std::string encode_text;
    bool fraction = false;
    bool decode = false;
    bool dual = false;
    std::size_t max_len = 64;
    // fractal
    std::string set = "sierpinski";
    int depth = 4;
    std::string point;
    bool trace = false;
    bool digits = false;
    std::string format = "svg";
    int width = 512;
    int cloud_len = 4;
    int cloud_width = 0;
    int jobs = 1;
    std::string out_path;
    // verify
    std::string prop;
    std::optional<int> verify_depth;
    int extra_depth = kDefaultExtraDepth;
    int ternary_depth = kMaxLemmaLen3;
    bool json = false;
};

int default_depth(const std::string& prop) {
    if (prop == "sum2") return 10;
    if (prop == "sum3") return 6;
    if (prop == "thm1") return 8;
    if (prop == "thm2") return 5;
    return kMaxLemmaLen2;
}

int run_verify(const Options& o, std::ostream& out) {
    const int n = o.verify_depth.value_or(default_depth(o.prop));
    VerificationReport report;
    if (o.prop == "sum2") {
        report = verify_prop_sum2(n, o.jobs);
    } else if (o.prop == "sum3") {
        report = verify_prop_sum3(n, o.jobs);
    } else if (o.prop == "thm1") {
        report = verify_theorem_main(n, o.extra_depth, o.jobs);
    } else if (o.prop == "thm2") {
        report = verify_theorem_snowflake(n, o.extra_depth, o.jobs);
    } else {
        report = verify_lemma_oracles(n, o.ternary_depth, o.jobs);
    }
    const std::string text = o.json ? report.to_json() + "\n" : report.to_text();
    out << text;
    if (!o.out_path.empty()) {
        write_output(o.out_path, text, out);
    }
    return report.pass() ? kExitOk : kExitFalse;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Egyptian fractions, digit vectors and their fractals", "egyptfrac"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    // efrac ----------------------------------------------------------------
    auto* efrac_cmd = app.add_subcommand("efrac", "Egyptian fraction algebra");
    efrac_cmd->require_subcommand(1);

    auto* expand = efrac_cmd->add_subcommand("expand", "Greedy expansion of a rational in (0, 1)");
    expand->add_option("value", o.value, "p/q")->required();
    expand->callback([&] {
        action = [&] {
            out << greedy_expand(Rational::parse(o.value)).to_string() << "\n";
            return kExitOk;
        };
    });

    auto* sum = efrac_cmd->add_subcommand("sum", "Sum of two Egyptian fractions as an Egyptian fraction");
    sum->add_option("x", o.lhs, "e.g. 1/2+1/3")->required();
    sum->add_option("y", o.rhs)->required();
    sum->add_flag("--disjoint", o.disjoint, "Require disjoint operands");
    sum->callback([&] {
        action = [&] {
            const auto x = EgyptianFraction::parse(o.lhs);
            const auto y = EgyptianFraction::parse(o.rhs);
            out << (o.disjoint ? add_disjoint(x, y) : add_general(x, y)).to_string() << "\n";
            return kExitOk;
        };
    });

    auto* sub = efrac_cmd->add_subcommand("sub", "Difference of two Egyptian fractions as a signed one");
    sub->add_option("x", o.lhs)->required();
    sub->add_option("y", o.rhs)->required();
    sub->add_flag("--disjoint", o.disjoint, "Require disjoint operands");
    sub->callback([&] {
        action = [&] {
            const auto x = EgyptianFraction::parse(o.lhs);
            const auto y = EgyptianFraction::parse(o.rhs);
            out << (o.disjoint ? sub_disjoint(x, y) : sub_general(x, y)).to_string() << "\n";
            return kExitOk;
        };
    });

    auto* check = efrac_cmd->add_subcommand("check", "Linearity of the summation map on a digit pair");
    check->add_option("--base", o.base, "2 or 3")->check(CLI::IsMember({2, 3}));
    check->add_option("x", o.lhs, "digits such as 101 or 10T")->required();
    check->add_option("y", o.rhs)->required();
    check->callback([&] {
        action = [&] { return o.base == 2 ? print_check<2>(o.lhs, o.rhs, out) : print_check<3>(o.lhs, o.rhs, out); };
    });

    auto* encode = efrac_cmd->add_subcommand("encode", "Numeral conversions");
    encode->add_option("text", o.encode_text, "integer, p/q with --fraction, or a numeral with --decode")
        ->required();
    encode->add_option("--base", o.base, "2 or 3 (default 3 for integers)")->check(CLI::IsMember({2, 3}));
    auto* frac_flag = encode->add_flag("--fraction", o.fraction, "Fractional expansion of p/q");
    encode->add_flag("--decode", o.decode, "Print the exact value of a numeral")->excludes(frac_flag);
    encode->add_flag("--dual", o.dual, "With --fraction: every eventually constant expansion")->needs(frac_flag);
    encode->add_option("--max-len", o.max_len, "Digit limit for --fraction");
    encode->callback([&] {
        const bool base_given = encode->count("--base") > 0;
        action = [&, base_given] {
            if (o.decode) {
                out << parse_numeral(o.encode_text).value() << "\n";
            } else if (o.fraction) {
                const Rational v = Rational::parse(o.encode_text);
                if (o.base == 2) {
                    print_fraction<2>(v, o.max_len, o.dual, out);
                } else {
                    print_fraction<3>(v, o.max_len, o.dual, out);
                }
            } else {
                const Rational v = Rational::parse(o.encode_text);
                if (!v.is_integer()) {
                    throw DomainError("'" + o.encode_text + "' is not an integer; use --fraction");
                }
                const BigInt n = v.numerator();
                out << format_numeral(base_given && o.base == 2 ? binary_numeral(n) : balanced_ternary_numeral(n))
                    << "\n";
            }
            return kExitOk;
        };
    });

    // fractal --------------------------------------------------------------
    auto* fractal_cmd = app.add_subcommand("fractal", "Sierpinski triangle and hexagon snowflake");
    fractal_cmd->require_subcommand(1);
    const auto set_check = CLI::IsMember({"sierpinski", "snowflake"});

    auto* member = fractal_cmd->add_subcommand("member", "Membership of an exact point");
    member->add_option("--set", o.set)->check(set_check);
    member->add_option("--depth", o.depth, "Approximant depth")->check(CLI::NonNegativeNumber);
    member->add_flag("--trace", o.trace, "Print the chosen map indices");
    member->add_flag("--digits", o.digits, "Use the digit condition on the limit set instead");
    member->add_option("point", o.point, "x,y with rational coordinates")->required();
    member->callback([&] {
        action = [&] {
            const Point p = Point::parse(o.point);
            const FractalKind kind = parse_fractal_kind(o.set);
            Membership m;
            if (o.digits) {
                m.member = kind == FractalKind::sierpinski ? digit_member_sierpinski(p) : digit_member_snowflake(p);
            } else {
                m = kind == FractalKind::sierpinski ? sierpinski_member(p, o.depth, o.trace)
                                                    : snowflake_member(p, o.depth, o.trace);
            }
            out << (m.member ? "member" : "not member") << "\n";
            if (o.trace && m.member && !o.digits) {
                out << "trace:";
                for (int i : m.trace) {
                    out << " " << i;
                }
                out << "\n";
            }
            return m.member ? kExitOk : kExitFalse;
        };
    });

    auto* render = fractal_cmd->add_subcommand("render", "Draw an approximant");
    render->add_option("--set", o.set)->check(set_check);
    render->add_option("--depth", o.depth)->check(CLI::NonNegativeNumber);
    render->add_option("--format", o.format)->check(CLI::IsMember({"svg", "pgm"}));
    render->add_option("--width", o.width, "Image width in pixels")
        ->check(CLI::Range(kMinRenderWidth, kMaxRenderWidth));
    render->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    render->add_option("--out", o.out_path, "Output file ('-' for stdout)");
    render->callback([&] {
        action = [&] {
            RenderJob job;
            job.spec = {parse_fractal_kind(o.set), o.depth};
            job.format = parse_image_format(o.format);
            job.width = o.width;
            job.viewport = Viewport::natural(job.spec.kind);
            job.jobs = o.jobs;
            write_output(o.out_path, job.format == ImageFormat::svg ? emit_svg(job) : rasterize_pgm(job), out);
            return kExitOk;
        };
    });

    auto* cloud = fractal_cmd->add_subcommand("cloud", "Plot the linear digit pairs");
    cloud->add_option("--base", o.base)->check(CLI::IsMember({2, 3}));
    cloud->add_option("--len", o.cloud_len, "Digit vector length")->check(CLI::NonNegativeNumber);
    cloud->add_option("--format", o.format)->check(CLI::IsMember({"svg", "pgm"}));
    cloud->add_option("--width", o.cloud_width, "Image width (default base^len)")
        ->check(CLI::Range(0, kMaxRenderWidth));
    cloud->add_option("--out", o.out_path, "Output file ('-' for stdout)");
    cloud->callback([&] {
        action = [&] {
            CloudJob job{o.base, o.cloud_len, parse_image_format(o.format), o.cloud_width};
            write_output(o.out_path, plot_linearity_cloud(job), out);
            return kExitOk;
        };
    });

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Exhaustive property checks");
    verify->add_option("--prop", o.prop)->required()->check(CLI::IsMember({"sum2", "sum3", "thm1", "thm2", "lemmas"}));
    verify->add_option("--depth", o.verify_depth, "Digit vector length N")->check(CLI::NonNegativeNumber);
    verify->add_option("--extra-depth", o.extra_depth, "thm1/thm2: geometric depth is N + this")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--ternary-depth", o.ternary_depth, "lemmas: base 3 length")->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    verify->add_option("--out", o.out_path, "Also write the report here");
    verify->add_flag("--json", o.json, "One-line JSON summary");
    verify->callback([&] { action = [&] { return run_verify(o, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const ResourceError& e) {
        err << "egyptfrac: resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const ParseError& e) {
        err << "egyptfrac: parse error at " << e.position() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "egyptfrac: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace efrac::cli
