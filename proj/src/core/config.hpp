// Runtime limits and data-file locations, overridable via a config file.
#pragma once

#include <cstdint>
#include <string>

namespace eichler {

struct Config {
    // Largest group order for which elements are enumerated explicitly
    // (conjugacy classes, subgroup lattices, isomorphism search).
    std::uint64_t max_raw_order = 100000;
    // Largest group order handled through direct-product composition.
    std::uint64_t max_composed_order = 10000000;
    // Largest index realized as a coset action when forming quotients.
    std::uint64_t max_coset_index = 20000;
    // Node budget for the isomorphism backtracking search.
    std::uint64_t max_backtrack_nodes = 10000000;
    // Hard ceiling on live cosets during coset enumeration when no order
    // is declared; with a declared order the allowance is 20x that order.
    std::uint64_t max_cosets = 1000000;
    // Rough element-storage budget (number of points across all stored
    // elements) for raw enumeration; guards degree*order blowups.
    std::uint64_t max_element_storage = 200000000;
    // Largest class count for which a character table is computed directly
    // (products of smaller tables are unaffected by this cap).
    std::uint64_t max_chartab_classes = 256;

    // Optional external data files; empty means use the built-in copies.
    std::string catalog_path;
    std::string presentations_path;

    // Parse "key = value" lines (# comments allowed) and overlay onto *this.
    void load_file(const std::string& path);
    void set_option(const std::string& key, const std::string& value);

    // Overlay from the environment variable EICHLERKIT_CONFIG if set.
    void load_from_env();
};

} // namespace eichler
