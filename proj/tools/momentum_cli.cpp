// Reads one JSON request, writes one JSON response.

#include "momentum.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"momentum: exact momentum polytopes and cones"};
    std::string in_path = "-", out_path = "-", svg_path;
    bool pretty = false;
    app.add_option("--in", in_path, "request file ('-' for stdin)");
    app.add_option("--out", out_path, "response file ('-' for stdout)");
    app.add_option("--svg", svg_path, "write the rendered SVG here");
    app.add_flag("--pretty", pretty, "indent the JSON response");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    using namespace momentum;
    try {
        std::string text;
        if (in_path == "-") {
            text = slurp(std::cin);
        } else {
            std::ifstream f(in_path);
            if (!f) throw RequestError("cannot open " + in_path);
            text = slurp(f);
        }
        cli::Response r = cli::run(json::parse(text));
        if (!svg_path.empty()) {
            if (r.svg) {
                std::ofstream f(svg_path, std::ios::binary);
                f << *r.svg;
            } else {
                std::cerr << "note: this command produces no drawing; " << svg_path << " not written\n";
            }
        }
        std::string dumped = r.body.dump(pretty ? 2 : -1) + "\n";
        if (out_path == "-") {
            std::cout << dumped;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            f << dumped;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(cli::classify(e));
    }
}
