#ifndef POLYSPHERE_IO_HPP
#define POLYSPHERE_IO_HPP

// Text formats. Rationals are written as integers or "p/q"; decimals are
// rejected. '#' starts a comment.
//
// Space file:
//     polysphere-space 1
//     dim 2
//     kind H              # H: rows are facet functionals, V: rows are points
//     name hex            # optional
//     symmetric           # optional: the negation of every row is implied
//     0 1
//     1 1/2
//     1 -1/2
//
// Map file:
//     polysphere-map 1
//     domain hex          # catalog expression or path (relative to the map file)
//     codomain hex
//     v0 -> w3            # vertex indices ...
//     1/2 1 -> 1 0        # ... or coordinates; images of -v are implied
//     facet 0 -> 1        # optional explicit facet correspondence

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "polysphere/isometry.hpp"

namespace polysphere {

enum class RepKind { H, V };

struct SpaceFile {
    int version = 1;
    Eigen::Index dim = 0;
    RepKind kind = RepKind::H;
    std::string name;
    bool symmetric_closure = false;
    Mat rows;
};

SpaceFile read_space_file(std::istream& in);
PolyhedralSpace build_space(const SpaceFile& file, const Limits& limits = {});

PolyhedralSpace parse_space(std::istream& in, const Limits& limits = {});
PolyhedralSpace parse_space(const std::string& text, const Limits& limits = {});

/// A catalog expression, or a path to a space file when one exists.
PolyhedralSpace load_space(const std::string& ref, const Limits& limits = {},
                           const std::filesystem::path& base_dir = {});

std::string serialize_space(const PolyhedralSpace& space, RepKind kind = RepKind::H);

SphereMap parse_map(std::istream& in, const std::filesystem::path& base_dir = {}, const Limits& limits = {});
SphereMap parse_map(const std::string& text, const std::filesystem::path& base_dir = {}, const Limits& limits = {});
SphereMap load_map(const std::filesystem::path& path, const Limits& limits = {});

std::string serialize_map(const SphereMap& map, const std::string& domain_ref, const std::string& codomain_ref);

/// Whitespace-separated rational rows, one point per line.
std::vector<Vec> parse_points(std::istream& in, Eigen::Index dim);
std::vector<Vec> load_points(const std::filesystem::path& path, Eigen::Index dim);

/// One point from tokens or a single comma/space separated string.
Vec parse_point(const std::vector<std::string>& tokens);

}  // namespace polysphere

#endif  // POLYSPHERE_IO_HPP
