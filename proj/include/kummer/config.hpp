#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/group.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// One `[generator]` block: a '+'/'-' sign pattern and exact translation
// offsets, both of the configured dimension.
struct GeneratorSpec {
    std::string signs;
    std::vector<Rational> translation;

    bool operator==(const GeneratorSpec&) const = default;
};

// Parsed configuration file. Translations are canonicalized to [0, 1) so
// that parse and serialize round-trip exactly.
struct Config {
    int dimension = 0;
    std::vector<GeneratorSpec> generators;

    bool operator==(const Config&) const = default;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::string unquote(const std::string& s, int line) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"')
        throw ConfigError(line, "expected a double-quoted string, got `" + s + "`");
    return s.substr(1, s.size() - 2);
}

}  // namespace detail

// Parses the plain-text configuration format:
//
//   dimension = 7
//
//   [generator]
//   signs = "----+++"
//   translation = ["0", "1/2", "0", "0", "0", "0", "0"]
//
// Blank lines and `#` comments are skipped. Every failure carries the
// 1-based line it was detected on.
inline Config parse_config(const std::string& text) {
    Config cfg;
    struct RawGen {
        GeneratorSpec spec;
        int block_line = 0;
        int signs_line = 0;
        int translation_line = 0;
    };
    std::vector<RawGen> gens;
    int dimension_line = 0;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = detail::trim(raw);
        if (s.empty() || s[0] == '#') continue;

        if (s[0] == '[') {
            if (s != "[generator]")
                throw ConfigError(line, "unknown section `" + s + "`");
            gens.push_back({{}, line, 0, 0});
            continue;
        }

        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line, "expected `key = value` or `[generator]`");
        std::string key = detail::trim(s.substr(0, eq));
        std::string value = detail::trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(line, "expected `key = value`");

        if (key == "dimension") {
            if (dimension_line != 0) throw ConfigError(line, "duplicate `dimension`");
            if (!gens.empty())
                throw ConfigError(line, "`dimension` must precede generator blocks");
            int n = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
            if (ec != std::errc() || ptr != value.data() + value.size())
                throw ConfigError(line, "`dimension` must be an integer, got `" + value + "`");
            if (n < 1 || n > 64)
                throw ConfigError(line, "`dimension` must be between 1 and 64");
            cfg.dimension = n;
            dimension_line = line;
        } else if (key == "signs") {
            if (gens.empty())
                throw ConfigError(line, "`signs` outside a [generator] block");
            RawGen& g = gens.back();
            if (g.signs_line != 0) throw ConfigError(line, "duplicate `signs` in block");
            g.spec.signs = detail::unquote(value, line);
            for (char c : g.spec.signs)
                if (c != '+' && c != '-')
                    throw ConfigError(line, std::string("signs may contain only '+' and "
                                                        "'-', got '") +
                                                c + "'");
            g.signs_line = line;
        } else if (key == "translation") {
            if (gens.empty())
                throw ConfigError(line, "`translation` outside a [generator] block");
            RawGen& g = gens.back();
            if (g.translation_line != 0)
                throw ConfigError(line, "duplicate `translation` in block");
            if (value.front() != '[' || value.back() != ']')
                throw ConfigError(line, "`translation` must be a [\"p/q\", ...] list");
            std::string body = detail::trim(value.substr(1, value.size() - 2));
            if (!body.empty()) {
                std::size_t pos = 0;
                while (true) {
                    std::size_t comma = body.find(',', pos);
                    std::string item = detail::trim(
                        body.substr(pos, comma == std::string::npos ? comma : comma - pos));
                    if (item.empty()) throw ConfigError(line, "empty translation entry");
                    std::string digits = detail::unquote(item, line);
                    try {
                        g.spec.translation.push_back(Rational::parse(digits).mod1());
                    } catch (const std::exception& e) {
                        throw ConfigError(line, "bad rational `" + digits +
                                                    "`: " + e.what());
                    }
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            g.translation_line = line;
        } else {
            throw ConfigError(line, "unknown key `" + key + "`");
        }
    }

    if (dimension_line == 0) throw ConfigError(1, "missing `dimension` entry");
    if (gens.empty()) throw ConfigError(line > 0 ? line : 1, "no [generator] blocks");
    for (const RawGen& g : gens) {
        if (g.signs_line == 0)
            throw ConfigError(g.block_line, "generator block is missing `signs`");
        if (g.translation_line == 0)
            throw ConfigError(g.block_line, "generator block is missing `translation`");
        if (static_cast<int>(g.spec.signs.size()) != cfg.dimension)
            throw ConfigError(g.signs_line,
                              "signs string has length " +
                                  std::to_string(g.spec.signs.size()) + ", dimension is " +
                                  std::to_string(cfg.dimension));
        if (static_cast<int>(g.spec.translation.size()) != cfg.dimension)
            throw ConfigError(g.translation_line,
                              "translation has " + std::to_string(g.spec.translation.size()) +
                                  " entries, dimension is " + std::to_string(cfg.dimension));
        cfg.generators.push_back(g.spec);
    }
    return cfg;
}

// Canonical text form of a configuration; parse(serialize(c)) == c up to
// the mod-1 normalization of translations.
inline std::string serialize_config(const Config& cfg) {
    std::string out = "dimension = " + std::to_string(cfg.dimension) + "\n";
    for (const GeneratorSpec& g : cfg.generators) {
        out += "\n[generator]\nsigns = \"" + g.signs + "\"\ntranslation = [";
        for (std::size_t i = 0; i < g.translation.size(); ++i) {
            if (i) out += ", ";
            out += "\"" + g.translation[i].mod1().str() + "\"";
        }
        out += "]\n";
    }
    return out;
}

// Builds and validates the configured group; group-theoretic failures
// propagate as their own error types rather than ConfigError.
inline GroupZ2k build_group(const Config& cfg) {
    std::vector<AffineInvolutionMap> maps;
    for (const GeneratorSpec& g : cfg.generators) {
        std::vector<int> signs;
        for (char c : g.signs) signs.push_back(c == '+' ? 1 : -1);
        maps.emplace_back(std::move(signs), g.translation);
    }
    return make_group(std::move(maps));
}

}  // namespace kummer
