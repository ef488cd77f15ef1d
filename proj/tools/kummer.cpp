#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <kummer/report.hpp>

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact topological bookkeeping for flat-torus quotients by commuting "
        "affine involutions: cohomology, fixed loci, resolvability and the "
        "rational intersection ring of the resolution."};

    std::string command;
    std::string config_path = "configs/example3.cfg";
    std::string format = "text";
    int k = -1;

    app.add_option("command", command,
                   "validate | betti | fixed-loci | orbits | check | pi1 | resolve | "
                   "ring | pairing | massey | report")
        ->required()
        ->check(CLI::IsMember({"validate", "betti", "fixed-loci", "orbits", "check",
                               "pi1", "resolve", "ring", "pairing", "massey",
                               "report"}));
    app.add_option("--config", config_path, "Configuration file")
        ->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--k", k, "Restrict the pairing command to one degree");

    CLI11_PARSE(app, argc, argv);

    bool color = false;
    if (const char* env = std::getenv("KUMMER_COLOR")) color = std::string(env) == "1";

    try {
        std::ifstream in(config_path);
        if (!in) throw IoError("cannot open configuration file `" + config_path + "`");
        std::stringstream buffer;
        buffer << in.rdbuf();

        kummer::Config cfg = kummer::parse_config(buffer.str());
        kummer::CommandOutput out = kummer::run(command, cfg, k, color);
        if (format == "json")
            std::cout << out.json.dump(2) << "\n";
        else
            std::cout << out.text;
        return 0;
    } catch (const std::exception& e) {
        kummer::Json record = kummer::error_json(e);
        if (dynamic_cast<const IoError*>(&e)) record["error"]["kind"] = "io";
        if (format == "json")
            std::cout << record.dump(2) << "\n";
        else
            std::cerr << "error [" << record["error"]["kind"].get<std::string>()
                      << "]: " << e.what() << "\n";
        return 1;
    }
}
