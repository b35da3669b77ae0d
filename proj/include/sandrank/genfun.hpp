#pragma once

#include <utility>

#include "sandrank/series.hpp"
#include "sandrank/word.hpp"

namespace sandrank {

/// Shape of a series in (x, y) truncated at total degree T.
TruncatedSeries xy_series(int T);
/// Shape of a series in (x, y, z): x,y total degree <= T, z degree <= z_max.
TruncatedSeries xyz_series(int T, int z_max);
/// Shape of a series in (q, z) with separate degree bounds.
TruncatedSeries qz_series(int Tq, int Tz);

/// H(x, y) = 1 + sum_{i >= 1} (x^i + y^i).
TruncatedSeries h_series(int T);

/// Largest Catalan(n-1) accepted by the L_n routines.
inline constexpr Int kMaxLnWords = 2'000'000;

/// L_n(x, y) = sum over w in D_n and s in Z of x^left(w,s) y^right(w,s).
TruncatedSeries Ln_direct(int n, int T);

/// (alpha, beta) of the weight W(w) = x^alpha y^beta.
std::pair<Int, Int> word_weight(const BinaryWord& w);
/// sum_{bfb in A_n} W(bfb) - sum_{afa in A_n} W(afa).
TruncatedSeries toxy_word_sum(int n, int T);
/// H(x, y) times toxy_word_sum; requires n >= 2.
TruncatedSeries Ln_via_toxy(int n, int T);

/// Carlitz q-Catalan series: q^area z^semilength over Dyck words.
TruncatedSeries carlitz_by_enumeration(int Tq, int Tz);
/// Fixpoint of C = 1 + z C(q, z) C(q, qz).
TruncatedSeries carlitz_by_recurrence(int Tq, int Tz);

/// sum_{n=1}^{N} L_n(x, y) z^{n-1}.
TruncatedSeries LnC_left(int N, int T);
/// H (Cx + Cy - Cx Cy) / (1 - Cx z Cy) with Cx = C(x, xz), Cy = C(y, yz).
TruncatedSeries LnC_right(int N, int T);
bool LnC_identity_check(int N, int T);

/// For every sorted parking configuration on K_n with sink in [s_min, s_max],
/// checks deg = C(n-1,2) - 1 + left - right and rank = left - 1.
bool Kn_bistatistic_check(int n, Int s_min, Int s_max);

} // namespace sandrank
