#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "xlra/scenario.hpp"

namespace xlra {

/// Pool of payload data pilots with the combined-visibility bookkeeping.
///
/// Each live row carries the element-wise sum of the visibility vectors of
/// the UEs assigned to it; a UE fits a row iff the dot product of its
/// visibility with the row is zero. Rows are scanned in creation order
/// (first fit), a row whose combined visibility becomes null is retired, and
/// surviving rows keep their ids.
class PdpPool {
 public:
  struct Row {
    int id = -1;
    std::vector<int> combined;  // entries stay in {0,1} while invariants hold
    std::vector<int> members;   // ue ids, ascending
  };

  /// First-fit allocation. Returns the stable pdp id. Throws
  /// std::domain_error for an all-zero visibility vector.
  int allocate(const VisibilityVector& vr, int ue);

  /// Allocation path for protocols that never share pilots: always mints a
  /// fresh pdp.
  int allocate_exclusive(const VisibilityVector& vr, int ue);

  /// Removes the UE from its pdp and retires the row if it becomes null.
  /// Throws std::domain_error if the UE holds no pdp, std::logic_error if the
  /// subtraction would drive an entry negative.
  void release(int ue, const VisibilityVector& vr);

  int size() const { return static_cast<int>(rows_.size()); }
  int assigned_users() const { return static_cast<int>(pdp_by_ue_.size()); }
  bool has_assignment(int ue) const { return pdp_by_ue_.count(ue) != 0; }
  int pdp_of(int ue) const;
  const std::vector<Row>& rows() const { return rows_; }

  /// Recomputes every row from the member visibilities and rechecks
  /// disjointness, binary entries, and the no-null-row rule. Returns false
  /// and fills `why` on the first violation.
  bool validate(std::string* why = nullptr) const;

  /// Line-oriented dump: "pdp <id> vr <bits> members <id,id,...>".
  void dump(std::ostream& os) const;

 private:
  int mint_row(const VisibilityVector& vr, int ue);

  std::vector<Row> rows_;
  std::unordered_map<int, int> pdp_by_ue_;
  std::unordered_map<int, VisibilityVector> vr_by_ue_;
  int next_id_ = 0;
};

}  // namespace xlra
