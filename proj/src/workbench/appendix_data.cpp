#include "rls/appendix.hpp"

#include <sstream>
#include <string>
#include <vector>


namespace rls {

namespace {

constexpr const char* kH1[] = {
    "1, -3, z - 1, 0, z - 4, 0, 2*z + 4",
    "0, 3*z + 1, 2*z + 1, 0, 2*z + 1, -2*z - 1, 0",
    "0, -3*z, -2*z, 0, -2*z - 1, 2*z + 1, 0",
    "0, 3*z + 3, z + 2, 1, z + 2, -z - 2, 0",
    "0, 3*z + 6, 3, 0, 4, -3, 0",
    "0, 3*z + 3, z + 2, 0, z + 2, -z - 1, 0",
    "0, 6, -2*z + 2, 0, -2*z + 2, 2*z - 2, 1",
};

constexpr const char* kH2[] = {
    "1, 0, 0, 0, 0, 0, 0",
    "z - 1, 1, 0, 2*z + 1, 0, 0, 0",
    "3, 0, 1, -2*z - 1, -3, 0, 2*z + 4",
    "0, 0, 0, 1, 0, 0, 0",
    "0, 0, 0, 0, 1, 0, 0",
    "0, 0, 0, 0, 0, 1, 0",
    "0, 0, 0, 0, 0, 0, 1",
};

constexpr const char* kH3[] = {
    "z, 0, 0, 0, 0, 0, 0",
    "0, z, 0, 0, 0, 0, 0",
    "0, 0, z, 0, 0, 0, 0",
    "z + 2, 0, 0, -z - 1, 0, 0, 0",
    "0, z + 2, 0, 0, -z - 1, 0, 0",
    "0, 3*z + 3, z + 2, 0, 0, -z - 1, 0",
    "0, 0, 0, 0, z - 1, 0, 1",
};

// (h1 h2 h3)^-1, stored rather than recomputed so that the product relation
// of the fixture is something that can fail.
constexpr const char* kH4[] = {
    "-z - 1, -3*z - 3, -z - 2, 0, -4*z - 5, 0, 4*z + 2",
    "-z - 2, -z - 4, z - 1, z - 1, -2*z - 7, -z - 2, 6*z + 6",
    "3*z + 3, 3, -2*z, -z + 1, 5*z + 7, 4*z + 5, -8*z - 4",
    "-z - 2, -3*z - 3, -z - 2, z, -4*z - 8, z - 1, 6*z + 6",
    "-3, -z - 2, 0, 3*z, z - 9, 3*z - 3, 6*z + 12",
    "0, -6*z - 6, -2*z - 4, -3, -4*z - 8, 2*z + 2, 6*z + 6",
    "3*z - 3, -9, 2*z - 2, 6*z + 3, 13*z - 10, 7*z + 2, 19",
};

Matrix parse_rows(const char* const (&rows)[7]) {
    std::vector<Cyclotomic> entries;
    for (const char* row : rows) {
        std::stringstream line(row);
        std::string cell;
        while (std::getline(line, cell, ',')) entries.push_back(parse_scalar(cell, 3));
    }
    return {7, 7, std::move(entries)};
}

}  // namespace

std::array<Matrix, 3> appendix_matrices() { return {parse_rows(kH1), parse_rows(kH2), parse_rows(kH3)}; }

std::array<Matrix, 4> appendix_fixture() {
    return {parse_rows(kH1), parse_rows(kH2), parse_rows(kH3), parse_rows(kH4)};
}

MonodromyTuple appendix_tuple() {
    auto [h1, h2, h3, h4] = appendix_fixture();
    return {{"x1", "x2", "x3", "inf"}, {std::move(h1), std::move(h2), std::move(h3), std::move(h4)}};
}

}  // namespace rls
