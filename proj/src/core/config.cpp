#include "core/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace eichler {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError("config: expected an unsigned integer for '" + key +
                         "', got '" + value + "'");
    }
}

} // namespace

void Config::set_option(const std::string& key, const std::string& value) {
    if (key == "max_raw_order") {
        max_raw_order = parse_u64(key, value);
    } else if (key == "max_composed_order") {
        max_composed_order = parse_u64(key, value);
    } else if (key == "max_coset_index") {
        max_coset_index = parse_u64(key, value);
    } else if (key == "max_backtrack_nodes") {
        max_backtrack_nodes = parse_u64(key, value);
    } else if (key == "max_cosets") {
        max_cosets = parse_u64(key, value);
    } else if (key == "max_element_storage") {
        max_element_storage = parse_u64(key, value);
    } else if (key == "max_chartab_classes") {
        max_chartab_classes = parse_u64(key, value);
    } else if (key == "catalog_path") {
        catalog_path = value;
    } else if (key == "presentations_path") {
        presentations_path = value;
    } else {
        throw ParseError("config: unknown option '" + key + "'");
    }
}

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("config: line " + std::to_string(lineno) +
                             ": expected 'key = value'");
        set_option(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

void Config::load_from_env() {
    if (const char* p = std::getenv("EICHLERKIT_CONFIG")) {
        if (*p) load_file(p);
    }
}

} // namespace eichler
