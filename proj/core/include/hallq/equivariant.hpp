#pragma once

#include "hallq/class_function.hpp"
#include "hallq/flags.hpp"

namespace hallq {

/// Virtual character of Aut(N) (GL_r(F_q) for r <= 2, S_r over F_1 for
/// r <= 6) with t-polynomial values: the equivariant Euler characteristic of
/// the period domain of type (delta, theta), computed as the alternating sum
/// over HN decompositions
///   sum_{tau |> delta} (-1)^{m-1} t^{e(tau)} prod_i gauss(eta_i, tau_i)
///                      * Ind_{P_eta}^{G}(1),
/// with eta_i = |tau_i| and e(tau) = sum_{i<j} (eta_i eta_j -
/// chi_op(tau_i, tau_j)). Specializing at the identity class with t -> q
/// (resp. t -> 1) recovers the brute-force semistable flag (resp. subset)
/// count.
ClassFunction equivariant_period_domain(const FlagType& ft, PeriodField field, int q);

/// The group model the equivariant computation runs on.
std::shared_ptr<const FiniteGroupModel> period_domain_group(const FlagType& ft,
                                                            PeriodField field, int q);

}  // namespace hallq
