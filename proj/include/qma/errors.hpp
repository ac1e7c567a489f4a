#pragma once

#include <stdexcept>
#include <string>

namespace qma {

enum class errc {
    not_skew,
    odd_exponent,
    index_out_of_range,
    shape_mismatch,
    shape_not_square,
    pattern_violation,
    invalid_spec,
    bad_partition,
    too_small,
    not_q_commuting,
    not_compatible,
    not_mutable,
    not_a_corner,
    not_closest_pair,
    prediction_mismatch,
    non_integral_seed,
    grid_mismatch,
    point_above_line,
    not_solid,
    config_error,
    io_error,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::not_skew: return "NotSkew";
    case errc::odd_exponent: return "OddExponent";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::shape_not_square: return "ShapeNotSquare";
    case errc::pattern_violation: return "PatternViolation";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::bad_partition: return "BadPartition";
    case errc::too_small: return "TooSmall";
    case errc::not_q_commuting: return "NotQCommuting";
    case errc::not_compatible: return "NotCompatible";
    case errc::not_mutable: return "NotMutable";
    case errc::not_a_corner: return "NotACorner";
    case errc::not_closest_pair: return "NotClosestPair";
    case errc::prediction_mismatch: return "PredictionMismatch";
    case errc::non_integral_seed: return "NonIntegralSeed";
    case errc::grid_mismatch: return "GridMismatch";
    case errc::point_above_line: return "PointAboveLine";
    case errc::not_solid: return "NotSolid";
    case errc::config_error: return "ConfigError";
    case errc::io_error: return "IOError";
    case errc::internal: return "Internal";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace qma
