#include "reldp/relalg/ops.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "reldp/error.hpp"
#include "row_hash.hpp"

namespace reldp::relalg {

std::string to_string(AggregateKind k) {
  switch (k) {
    case AggregateKind::sum:
      return "SUM";
    case AggregateKind::min:
      return "MIN";
    case AggregateKind::max:
      return "MAX";
  }
  return "?";
}

namespace {

void check_cap(const Table& t, std::size_t cap) {
  if (t.size() > cap)
    throw CapacityError("table exceeds row cap of " + std::to_string(cap) + " rows");
}

std::vector<std::size_t> resolve(const Table& t, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  std::set<std::string> seen;
  out.reserve(names.size());
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw SchemaError("column '" + n + "' listed twice");
    out.push_back(t.index_of(n));
  }
  return out;
}

std::vector<Column> joined_columns(const Table& t1, const Table& t2) {
  std::vector<Column> cols = t1.columns();
  for (const auto& c : t2.columns()) {
    if (t1.has_column(c.name)) throw SchemaError("cross join over shared column '" + c.name + "'");
    cols.push_back(c);
  }
  return cols;
}

/// Copies selected columns of a source row into scratch buffers laid out for
/// a destination schema.
class Gather {
 public:
  Gather(const Table& src, const std::vector<std::size_t>& src_cols, const Table& dst) {
    for (std::size_t i = 0; i < src_cols.size(); ++i) {
      const auto from = src.slot(src_cols[i]);
      const auto to = dst.slot(i);
      if (from.wide != to.wide) throw SchemaError("column width mismatch in projection");
      (from.wide ? wide_ : scalar_).push_back({from.index, to.index});
    }
  }

  void operator()(const Table& src, std::size_t row, std::vector<std::int64_t>& s, std::vector<BigInt>& w) const {
    const auto sc = src.scalars(row);
    const auto wd = src.wides(row);
    for (const auto& [from, to] : scalar_) s[to] = sc[from];
    for (const auto& [from, to] : wide_) w[to] = wd[from];
  }

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> scalar_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> wide_;
};

void concat_row(const Table& t1, std::size_t r1, const Table& t2, std::size_t r2, std::vector<std::int64_t>& s,
                std::vector<BigInt>& w) {
  s.clear();
  w.clear();
  const auto s1 = t1.scalars(r1);
  const auto s2 = t2.scalars(r2);
  s.insert(s.end(), s1.begin(), s1.end());
  s.insert(s.end(), s2.begin(), s2.end());
  const auto w1 = t1.wides(r1);
  const auto w2 = t2.wides(r2);
  w.insert(w.end(), w1.begin(), w1.end());
  w.insert(w.end(), w2.begin(), w2.end());
}

}  // namespace

Table rename(const Table& t, const std::map<std::string, std::string>& mapping) {
  std::vector<Column> cols;
  std::set<std::string> targets;
  for (const auto& c : t.columns()) {
    auto it = mapping.find(c.name);
    if (it == mapping.end()) throw SchemaError("rename mapping is undefined on column '" + c.name + "'");
    if (!targets.insert(it->second).second)
      throw SchemaError("rename mapping is not injective on target '" + it->second + "'");
    cols.push_back({it->second, c.domain});
  }
  for (const auto& [from, to] : mapping)
    if (!t.has_column(from)) throw SchemaError("rename mapping names unknown column '" + from + "'");
  Table out(std::move(cols));
  out.reserve(t.size());
  for (std::size_t r = 0; r < t.size(); ++r) out.append(t.scalars(r), t.wides(r));
  return out;
}

Table select(const Table& t, const Formula& phi) {
  const BoundFormula bound(phi, t);
  Table out(t.columns());
  for (std::size_t r = 0; r < t.size(); ++r)
    if (bound(t, r)) out.append(t.scalars(r), t.wides(r));
  return out;
}

Table cross_join(const Table& t1, const Table& t2, std::size_t row_cap) {
  Table out(joined_columns(t1, t2));
  if (t1.size() != 0 && t2.size() > row_cap / t1.size())
    throw CapacityError("cross join of " + std::to_string(t1.size()) + " x " + std::to_string(t2.size()) +
                        " rows exceeds row cap of " + std::to_string(row_cap));
  out.reserve(t1.size() * t2.size());
  std::vector<std::int64_t> s;
  std::vector<BigInt> w;
  for (std::size_t a = 0; a < t1.size(); ++a)
    for (std::size_t b = 0; b < t2.size(); ++b) {
      concat_row(t1, a, t2, b, s, w);
      out.append(s, w);
    }
  return out;
}

Table theta_join(const Table& t1, const Table& t2, const Formula& phi, std::size_t row_cap) {
  Table out(joined_columns(t1, t2));

  std::vector<std::size_t> left_keys;
  std::vector<std::size_t> right_keys;
  std::vector<Formula> residual;
  for (const auto& c : phi.conjuncts()) {
    if (c.kind() == Formula::Kind::equals_column) {
      auto l1 = t1.find(c.column());
      auto r2 = t2.find(c.other_column());
      if (!l1 || !r2) {
        l1 = t1.find(c.other_column());
        r2 = t2.find(c.column());
      }
      if (l1 && r2 && t1.slot(*l1).wide == t2.slot(*r2).wide) {
        left_keys.push_back(*l1);
        right_keys.push_back(*r2);
        continue;
      }
    }
    residual.push_back(c);
  }
  const BoundFormula filter(Formula::all_of(std::move(residual)), out);

  std::vector<std::int64_t> s;
  std::vector<BigInt> w;
  auto emit = [&](std::size_t a, std::size_t b) {
    concat_row(t1, a, t2, b, s, w);
    out.append(s, w);
    if (!filter(out, out.size() - 1)) {
      out.pop_back();
      return;
    }
    check_cap(out, row_cap);
  };

  if (left_keys.empty()) {
    for (std::size_t a = 0; a < t1.size(); ++a)
      for (std::size_t b = 0; b < t2.size(); ++b) emit(a, b);
    return out;
  }

  RowKeyHash right_hash{&t2, right_keys};
  std::unordered_multimap<std::size_t, std::size_t> index;
  index.reserve(t2.size());
  for (std::size_t b = 0; b < t2.size(); ++b) index.emplace(right_hash(b), b);
  RowKeyHash left_hash{&t1, left_keys};
  RowKeyEq eq{&t1, &t2, left_keys, right_keys};
  std::vector<std::size_t> matches;
  for (std::size_t a = 0; a < t1.size(); ++a) {
    auto [lo, hi] = index.equal_range(left_hash(a));
    matches.clear();
    for (auto it = lo; it != hi; ++it)
      if (eq(a, it->second)) matches.push_back(it->second);
    // equal_range order is unspecified; emit right rows in table order.
    std::sort(matches.begin(), matches.end());
    for (std::size_t b : matches) emit(a, b);
  }
  return out;
}

Table project(const Table& t, const std::vector<std::string>& keep) {
  return extended_project(t, keep, {});
}

Table extended_project(const Table& t, const std::vector<std::string>& keep,
                       const std::vector<Assignment>& computed) {
  const auto kept = resolve(t, keep);
  std::vector<Column> cols;
  std::set<std::string> names(keep.begin(), keep.end());
  for (std::size_t i : kept) cols.push_back(t.columns()[i]);
  std::vector<BoundValueExpr> exprs;
  for (const auto& a : computed) {
    if (!names.insert(a.target.name).second)
      throw SchemaError("extended projection assigns column '" + a.target.name + "' that is already present");
    cols.push_back(a.target);
    exprs.emplace_back(a.expr, t);
  }
  Table out(std::move(cols));
  out.reserve(t.size());

  const Gather gather(t, kept, out);
  std::vector<std::int64_t> s(out.scalar_width());
  std::vector<BigInt> w(out.wide_width());
  for (std::size_t r = 0; r < t.size(); ++r) {
    gather(t, r, s, w);
    for (std::size_t j = 0; j < computed.size(); ++j) {
      const std::size_t col = kept.size() + j;
      const auto slot = out.slot(col);
      const auto& dom = out.columns()[col].domain;
      if (slot.wide) {
        exprs[j].eval(t, r, w[slot.index]);
        if (!dom.contains(w[slot.index]))
          throw SchemaError("value " + w[slot.index].get_str() + " outside domain of '" +
                            out.columns()[col].name + "'");
      } else {
        s[slot.index] = exprs[j].eval_scalar(t, r);
        if (!dom.contains(s[slot.index]))
          throw SchemaError("value " + std::to_string(s[slot.index]) + " outside domain of '" +
                            out.columns()[col].name + "'");
      }
    }
    out.append(s, w);
  }
  if (kept.size() < t.num_columns()) out.make_set();
  return out;
}

Table group_aggregate(const Table& t, const std::vector<std::string>& group_by,
                      const std::vector<AggregateColumn>& aggregates) {
  const auto keys = resolve(t, group_by);
  std::vector<Column> cols;
  std::set<std::string> names(group_by.begin(), group_by.end());
  for (std::size_t i : keys) cols.push_back(t.columns()[i]);
  std::vector<BoundValueExpr> args;
  for (const auto& a : aggregates) {
    if (!names.insert(a.target.name).second)
      throw SchemaError("aggregate target '" + a.target.name + "' clashes with another output column");
    cols.push_back(a.target);
    args.emplace_back(a.aggregate.arg, t);
  }
  Table out(std::move(cols));

  RowKeyHash hash{&t, keys};
  RowKeyEq eq{&t, &t, keys, keys};
  std::unordered_map<std::size_t, std::size_t, RowKeyHash, RowKeyEq> group_of(t.size() * 2 + 1, hash, eq);
  std::vector<std::size_t> representative;
  std::vector<std::size_t> group(t.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    auto [it, fresh] = group_of.emplace(r, representative.size());
    if (fresh) representative.push_back(r);
    group[r] = it->second;
  }
  const std::size_t ngroups = representative.size();

  // Accumulators: one BigInt or int64 per (group, aggregate).
  const std::size_t naggr = aggregates.size();
  std::vector<BigInt> big(ngroups * naggr);
  std::vector<std::int64_t> small(ngroups * naggr, 0);
  std::vector<char> seeded(ngroups * naggr, 0);
  BigInt v;
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t j = 0; j < naggr; ++j) {
      const std::size_t at = group[r] * naggr + j;
      const auto kind = aggregates[j].aggregate.kind;
      if (aggregates[j].target.domain.wide()) {
        args[j].eval(t, r, v);
        if (!seeded[at]) {
          big[at] = v;
        } else if (kind == AggregateKind::sum) {
          big[at] += v;
        } else if ((kind == AggregateKind::min) ? v < big[at] : v > big[at]) {
          big[at] = v;
        }
      } else {
        const std::int64_t x = args[j].eval_scalar(t, r);
        if (!seeded[at]) {
          small[at] = x;
        } else if (kind == AggregateKind::sum) {
          if (__builtin_add_overflow(small[at], x, &small[at]))
            throw SchemaError("64-bit overflow in SUM for '" + aggregates[j].target.name + "'");
        } else if ((kind == AggregateKind::min) ? x < small[at] : x > small[at]) {
          small[at] = x;
        }
      }
      seeded[at] = 1;
    }
  }

  out.reserve(ngroups);
  const Gather gather(t, keys, out);
  std::vector<std::int64_t> s(out.scalar_width());
  std::vector<BigInt> w(out.wide_width());
  for (std::size_t g = 0; g < ngroups; ++g) {
    gather(t, representative[g], s, w);
    for (std::size_t j = 0; j < naggr; ++j) {
      const std::size_t col = keys.size() + j;
      const auto slot = out.slot(col);
      const auto& dom = out.columns()[col].domain;
      const bool ok = slot.wide ? dom.contains(big[g * naggr + j]) : dom.contains(small[g * naggr + j]);
      if (!ok) throw SchemaError("aggregate value outside domain of '" + out.columns()[col].name + "'");
      if (slot.wide)
        w[slot.index] = big[g * naggr + j];
      else
        s[slot.index] = small[g * naggr + j];
    }
    out.append(s, w);
  }
  return out;
}

}  // namespace reldp::relalg
