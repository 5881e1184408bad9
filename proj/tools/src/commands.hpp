#pragma once

#include <cstdint>
#include <string>

#include "latsnake/contfrac.hpp"
#include "latsnake/graphs.hpp"
#include "latsnake/orders.hpp"
#include "latsnake/quadirr.hpp"
#include "report.hpp"

namespace latsnake::cli {

struct Config {
    std::uint32_t max_total = 11;
    std::size_t edge_cap = 64;
    unsigned digits = 30;
    unsigned threads = 0;
    Format format = Format::Text;
};

Json coeffs_json(const Coeffs& c);
Json quad_json(const QuadraticIrrational& x, unsigned digits);
Json record_json(const PathRecord& r, unsigned digits);

/// Paper-value regression table.
Json verify_report(const Config& config);

}  // namespace latsnake::cli
