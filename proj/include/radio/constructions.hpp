#pragma once

#include <cstdint>
#include <memory>
#include <string_view>

#include "radio/ordering.hpp"

namespace radio {

enum class Family { star_star, path_star };

std::string_view family_name(Family f) noexcept;

struct FamilyParams {
  Family family;
  int m;
  int n;
};

/// Throws Error(bad_params) unless m >= n >= 3 (star_star) or m, n >= 3 (path_star).
void validate(const FamilyParams& params);

/// K_{1,m} x K_{1,n} or P_m x K_{1,n}. Path vertex x_i is stored as i - 1,
/// star vertex y_j as j with the hub at 0.
std::shared_ptr<const ProductGraph> family_graph(const FamilyParams& params);

/// (x_i, y_j) goes to position (i-j)(n+1)+j when i >= j, else (m+2+i-j)(n+1)-i-1.
VertexOrdering star_star_ordering(int m, int n);

/// Odd m: the rows x_1, x_{(m+1)/2}, x_m are placed by a table chosen by
/// n mod 3, the remaining rows by a second table. Even m: one table.
/// For n = 3 and odd m the first table does not give a radio labeling, so
/// that case uses a separate ordering (see path_star_n3_ordering).
/// Throws Error(construction_integrity) if the tables collide.
VertexOrdering path_star_ordering(int m, int n);

/// The two tables alone, with no special case for n = 3.
VertexOrdering path_star_table_ordering(int m, int n);

/// An ordering of P_m x K_{1,3} (odd m) meeting the pairwise distance
/// condition. Stored for m <= 7, otherwise found by a seeded local search.
/// Throws Error(construction_integrity) if the search gives up.
VertexOrdering path_star_n3_ordering(int m);

VertexOrdering family_ordering(const FamilyParams& params);

/// mn + 3(m+n) + 1 for stars; (m^2(n+1) + 2m + n - 1) / 2 for odd paths and
/// (m^2(n+1) + 2(m-1)) / 2 for even paths.
std::int64_t closed_form_rn(const FamilyParams& params);

}  // namespace radio
