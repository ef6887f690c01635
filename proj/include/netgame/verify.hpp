#ifndef NETGAME_VERIFY_HPP
#define NETGAME_VERIFY_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "netgame/closed_form.hpp"

namespace netgame {

inline constexpr double kClosedFormTolerance = 1e-10;

/// Closed forms under audit. Defaults are the library formulas; tests swap
/// one out to make sure the harness actually fails.
struct ClosedFormSet {
  std::function<double(int)> complete = complete_scaled<double>;
  std::function<CentralityPair<double>(int, double)> nearly_complete =
      nearly_complete_scaled<double>;
  std::function<double(int, double)> nearly_complete_printed_big =
      nearly_complete_big_as_printed<double>;
  std::function<CentralityPair<double>(int, double)> star = star_scaled<double>;
  std::function<double(int, double)> star_leaf_link = star_leaf_link_scaled<double>;
  std::function<double(int, double)> complete_threshold = complete_stable_threshold<double>;
  std::function<StarWindow<double>(int, double)> window = star_window<double>;
};

/// Alphas to test at each n: `absolute` values as given, plus s / (n - 1)
/// for every s in `relative`.
struct AlphaGrid {
  std::vector<double> absolute;
  std::vector<double> relative;

  std::vector<double> at(int n) const;
};

enum class RowStatus { Pass, Fail, AuditMatch, AuditMismatch, Skipped };

struct VerifyRow {
  std::string lemma;
  int n = 0;
  double alpha = 0.0;
  double closed_form = 0.0;
  double numerical = 0.0;
  double abs_error = 0.0;
  RowStatus status = RowStatus::Pass;
  std::string note;
};

struct VerificationReport {
  std::vector<VerifyRow> rows;

  /// Audit and skipped rows never fail the report.
  bool all_pass() const;
  /// Largest error over checked rows of `lemma`; 0 when none exist.
  double max_error(const std::string& lemma) const;
  std::size_t count(RowStatus status) const;
  const VerifyRow* find(const std::string& lemma, int n, double alpha) const;
};

/// Compares every closed form against component-scaled Katz values computed by
/// dense linear solves, for n in [n_min, n_max] and each grid alpha.
VerificationReport verify_closed_forms(int n_min, int n_max, const AlphaGrid& grid,
                                       const ClosedFormSet& forms = {});

/// CSV: lemma,n,alpha,closed_form,numerical,abs_error,pass
void write_verification_csv(std::ostream& out, const VerificationReport& report);

std::string to_string(RowStatus status);

}  // namespace netgame

#endif  // NETGAME_VERIFY_HPP
