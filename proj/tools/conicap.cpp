// conicap: command-line front end for the conicap library.

#include "conicap/commands.hpp"
#include "conicap/error.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace conicap;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_input = 2;

struct Options {
    std::string input = "-";
    std::string output = "-";
    unsigned long height = 50;
    int order = default_series_order;
    std::string sign = "+";
    std::string target;
};

json read_input(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw Error(ErrorCode::invalid_input, "cannot open input file " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::invalid_input, std::string("malformed JSON: ") + e.what());
    }
}

void write_output(const std::string& path, const json& value)
{
    std::string text = value.dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::invalid_input, "cannot open output file " + path);
    out << text;
}

json error_object(const std::string& code, const std::string& message)
{
    return {{"error", {{"code", code}, {"message", message}}}};
}

FiberSign parse_sign(const std::string& s)
{
    if (s == "+")
        return FiberSign::plus;
    if (s == "-")
        return FiberSign::minus;
    throw Error(ErrorCode::invalid_input, "--sign must be + or -");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact arithmetic progressions on conics, elliptic curves and q-series"};
    app.require_subcommand(1);
    Options opt;

    auto add_io = [&](CLI::App* sub, bool takes_input) {
        if (takes_input)
            sub->add_option("--input", opt.input, "JSON payload path, or - for stdin");
        sub->add_option("--output", opt.output, "Output path, or - for stdout");
    };

    auto* find_ap = app.add_subcommand("find-ap", "Search progressions for a conic, map and t0");
    add_io(find_ap, true);
    find_ap->add_option("--height", opt.height, "Point-search height bound");
    find_ap->add_option("--sign", opt.sign, "Fiber sign, + or -");

    auto* congruent = app.add_subcommand("congruent", "Convert among congruum, square triple, point, triangle");
    add_io(congruent, true);
    congruent->add_option("--height", opt.height, "Point-search height bound when only delta is given");

    auto* normalize = app.add_subcommand("normalize", "Move an order-4 point to (0,0) on E_k");
    add_io(normalize, true);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    add_io(verify, false);
    verify->add_option("suite", opt.target, "table1, tower, symmetry or all")->required();
    verify->add_option("--order", opt.order, "Series truncation order");

    auto* series = app.add_subcommand("series", "Dump q-expansions of k, r, j");
    add_io(series, false);
    opt.target = "all";
    series->add_option("name", opt.target, "k, r, j or all");
    series->add_option("--order", opt.order, "Number of coefficients");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_object("invalid_input", e.what()).dump(2) << "\n";
        return exit_input;
    }

    try {
        if (opt.order < 1)
            throw Error(ErrorCode::invalid_input, "--order must be positive");
        json result;
        int status = exit_ok;
        if (*find_ap) {
            result = cmd_find_ap(read_input(opt.input), opt.height, parse_sign(opt.sign));
        } else if (*congruent) {
            result = cmd_congruent(read_input(opt.input), opt.height);
        } else if (*normalize) {
            result = cmd_normalize(read_input(opt.input));
        } else if (*verify) {
            result = cmd_verify(opt.target, opt.order);
            status = result["ok"].get<bool>() ? exit_ok : exit_failure;
        } else {
            result = cmd_series(opt.target, opt.order);
        }
        write_output(opt.output, result);
        return status;
    } catch (const Error& e) {
        std::string code(error_code_name(e.code()));
        std::cout << error_object(code, e.what()).dump(2) << "\n";
        return is_input_error(e.code()) ? exit_input : exit_failure;
    } catch (const json::exception& e) {
        std::cout << error_object("invalid_input", e.what()).dump(2) << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cout << error_object("internal", e.what()).dump(2) << "\n";
        return exit_failure;
    }
}
