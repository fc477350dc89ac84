#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pencils/driver.hpp"
#include "pencils/errors.hpp"
#include "pencils/report.hpp"

namespace {

int run_compute(const std::string& input_path, const std::string& json_path,
                const pencils::DriverOptions& options) {
    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "error: cannot read " << input_path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    try {
        auto start = std::chrono::steady_clock::now();
        pencils::ParsedInput input = pencils::parse_input(buf.str());
        pencils::Pencil pencil =
            pencils::make_pencil(input.field, input.F, input.G);
        pencils::DriverResult result = pencils::run_driver(pencil, options);
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();

        std::cout << pencils::render_text(input, result, seconds);
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) {
                std::cerr << "error: cannot write " << json_path << "\n";
                return 2;
            }
            out << pencils::render_json(input, result);
        }
        return 0;
    } catch (const pencils::ExtensionRequiredError& e) {
        std::cerr << "extension required: " << e.what() << "\n";
        return 3;
    } catch (const pencils::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const pencils::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral components of special fibers of pencils of plane "
                 "curves, in exact arithmetic"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand(
        "compute", "Resolve base points and compute the special fibers");
    std::string input_path, json_path;
    pencils::DriverOptions options;
    bool no_verify = false;
    compute->add_option("INPUT", input_path, "Input file")->required();
    compute->add_option("--json", json_path, "Write the JSON document here");
    compute->add_flag("--dump-candidates", options.dump_candidates,
                      "Include full candidate dumps in the output");
    compute->add_option("--max-degree", options.max_degree,
                        "Stop the component search at this degree");
    compute->add_flag("--no-verify", no_verify,
                      "Skip the independent verification pass");
    compute->add_option("--probe-seed", options.probe_seed,
                        "Probe-member sequence offset");
    compute->add_option("--threads", options.threads,
                        "Worker threads for the candidate filters");

    CLI11_PARSE(app, argc, argv);

    options.verify = !no_verify;
    return run_compute(input_path, json_path, options);
}
