#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "classbound/config.hpp"

namespace classbound {

inline constexpr std::uint32_t npos32 = 0xFFFFFFFFu;

// Open-addressing index over an external, growing element pool. Stores only
// 32-bit indices, so enumerating ~10^6 matrices doesn't duplicate every
// element inside a node-based map.
template <class E>
class IndexTable {
 public:
  explicit IndexTable(const std::vector<E>* pool) : pool_(pool) { rehash(1024); }

  void insert(std::uint32_t idx) {
    if ((count_ + 1) * 10 > slots_.size() * 7) rehash(slots_.size() * 2);
    std::size_t s = probe((*pool_)[idx]);
    slots_[s] = idx;
    ++count_;
  }

  std::uint32_t find(const E& e) const {
    std::size_t s = e.hash() & mask_;
    while (slots_[s] != npos32) {
      if ((*pool_)[slots_[s]] == e) return slots_[s];
      s = (s + 1) & mask_;
    }
    return npos32;
  }

  // The owner must call this after moving the pool vector object.
  void repoint(const std::vector<E>* pool) { pool_ = pool; }

 private:
  std::size_t probe(const E& e) const {
    std::size_t s = e.hash() & mask_;
    while (slots_[s] != npos32) s = (s + 1) & mask_;
    return s;
  }

  void rehash(std::size_t n) {
    std::vector<std::uint32_t> old = std::move(slots_);
    slots_.assign(n, npos32);
    mask_ = n - 1;
    for (std::uint32_t idx : old)
      if (idx != npos32) slots_[probe((*pool_)[idx])] = idx;
  }

  const std::vector<E>* pool_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
  std::size_t count_ = 0;
};

// Conjugacy data for an enumerated group. All fields hold indices into the
// owning group's element list. reps[c] is the lexicographically least member
// of class c (a consequence of scanning elements in sorted order), and
// transporter[i] names a t with reps[class_of[i]]^t = element i.
struct ClassSet {
  std::vector<std::uint32_t> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> transporter;

  std::uint64_t count() const { return reps.size(); }
};

// Order-and-class invariants used to compare groups up to the strength of
// "same order, same class size multiset, same element order statistics".
struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> class_sizes;                           // ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_hist;  // (order, count)

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "order=" << order << " classes=[";
    for (std::size_t i = 0; i < class_sizes.size(); ++i)
      os << (i ? "," : "") << class_sizes[i];
    os << "] orders={";
    for (std::size_t i = 0; i < order_hist.size(); ++i)
      os << (i ? "," : "") << order_hist[i].first << ":" << order_hist[i].second;
    os << "}";
    return os.str();
  }
};

// A finite group held as an explicit, sorted element list. E must provide
// operator*, inverse(), operator==, operator<, hash(), and is_identity().
// Everything downstream (classes, centralizers, quotients, subgroup lattices)
// works uniformly for permutations and matrices through this one template.
template <class E>
class EnumeratedGroup {
 public:
  EnumeratedGroup(E identity, std::vector<E> generators,
                  std::uint64_t cap = config().enumeration_cap)
      : gens_(std::move(generators)), table_(&elems_) {
    elems_.push_back(std::move(identity));
    IndexTable<E> seen(&elems_);
    seen.insert(0);
    for (std::size_t qi = 0; qi < elems_.size(); ++qi) {
      for (const E& s : gens_) {
        E y = elems_[qi] * s;
        if (seen.find(y) != npos32) continue;
        require(elems_.size() < cap, Errc::CapExceeded,
                "group enumeration exceeded cap of " + std::to_string(cap));
        elems_.push_back(std::move(y));
        seen.insert(static_cast<std::uint32_t>(elems_.size() - 1));
      }
    }
    std::sort(elems_.begin(), elems_.end());
    table_ = IndexTable<E>(&elems_);
    for (std::uint32_t i = 0; i < elems_.size(); ++i) table_.insert(i);
    for (std::uint32_t i = 0; i < elems_.size(); ++i)
      if (elems_[i].is_identity()) {
        id_ = i;
        break;
      }
  }

  // The index table points into elems_, so moves and copies must re-seat it.
  EnumeratedGroup(EnumeratedGroup&& other) noexcept
      : elems_(std::move(other.elems_)),
        gens_(std::move(other.gens_)),
        table_(std::move(other.table_)),
        id_(other.id_),
        classes_(std::move(other.classes_)) {
    table_.repoint(&elems_);
  }
  EnumeratedGroup& operator=(EnumeratedGroup&& other) noexcept {
    elems_ = std::move(other.elems_);
    gens_ = std::move(other.gens_);
    table_ = std::move(other.table_);
    id_ = other.id_;
    classes_ = std::move(other.classes_);
    table_.repoint(&elems_);
    return *this;
  }
  EnumeratedGroup(const EnumeratedGroup& other)
      : elems_(other.elems_),
        gens_(other.gens_),
        table_(other.table_),
        id_(other.id_),
        classes_(other.classes_ ? std::make_unique<ClassSet>(*other.classes_) : nullptr) {
    table_.repoint(&elems_);
  }
  EnumeratedGroup& operator=(const EnumeratedGroup& other) {
    if (this != &other) *this = EnumeratedGroup(other);
    return *this;
  }

  std::uint64_t order() const { return elems_.size(); }
  const std::vector<E>& elements() const { return elems_; }
  const std::vector<E>& generators() const { return gens_; }
  const E& element(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t identity_index() const { return id_; }
  const E& identity_element() const { return elems_[id_]; }

  std::uint32_t find(const E& e) const { return table_.find(e); }
  bool contains(const E& e) const { return find(e) != npos32; }

  std::uint32_t index_of(const E& e) const {
    std::uint32_t i = find(e);
    require(i != npos32, Errc::ElementNotInGroup, "element is not in the group");
    return i;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return index_of(elems_[a] * elems_[b]);
  }
  std::uint32_t inv(std::uint32_t a) const { return index_of(elems_[a].inverse()); }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
    return index_of(elems_[g].inverse() * elems_[x] * elems_[g]);
  }

  std::uint64_t element_order(std::uint32_t i) const {
    std::uint64_t n = 1;
    E acc = elems_[i];
    while (!acc.is_identity()) {
      acc = acc * elems_[i];
      ++n;
    }
    return n;
  }

  bool is_abelian() const {
    for (const E& a : gens_)
      for (const E& b : gens_)
        if (!(a * b == b * a)) return false;
    return true;
  }

  // Conjugacy classes with transporters, computed once and cached. Scanning
  // i in index order makes every class rep the lex-min member of its class.
  const ClassSet& classes() const {
    if (classes_) return *classes_;
    auto cs = std::make_unique<ClassSet>();
    std::uint32_t n = static_cast<std::uint32_t>(elems_.size());
    cs->class_of.assign(n, npos32);
    cs->transporter.assign(n, npos32);
    std::vector<E> gen_inv;
    for (const E& s : gens_) gen_inv.push_back(s.inverse());
    std::vector<std::uint32_t> queue;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (cs->class_of[i] != npos32) continue;
      std::uint32_t c = static_cast<std::uint32_t>(cs->reps.size());
      cs->reps.push_back(i);
      cs->class_of[i] = c;
      cs->transporter[i] = id_;
      queue.assign(1, i);
      std::uint64_t size = 1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::uint32_t x = queue[qi];
        for (std::size_t si = 0; si < gens_.size(); ++si) {
          std::uint32_t yi = index_of(gen_inv[si] * elems_[x] * gens_[si]);
          if (cs->class_of[yi] != npos32) continue;
          cs->class_of[yi] = c;
          cs->transporter[yi] = index_of(elems_[cs->transporter[x]] * gens_[si]);
          queue.push_back(yi);
          ++size;
        }
      }
      cs->sizes.push_back(size);
    }
    classes_ = std::move(cs);
    return *classes_;
  }

  std::uint64_t class_count() const { return classes().count(); }

  std::vector<std::uint32_t> centralizer_members(std::uint32_t x) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < elems_.size(); ++i)
      if (elems_[i] * elems_[x] == elems_[x] * elems_[i]) out.push_back(i);
    return out;
  }

  // Generating set for C_G(x). Scans elements in canonical order, keeping the
  // ones that enlarge the generated subgroup, and stops once the known
  // centralizer order |G|/|x^G| is reached, so on big groups the scan usually
  // ends after a handful of elements.
  std::vector<E> centralizer_generators(std::uint32_t x) const {
    const ClassSet& cs = classes();
    std::uint64_t target = order() / cs.sizes[cs.class_of[x]];
    std::vector<E> gens;
    std::vector<E> members{elems_[id_]};
    IndexTable<E> seen(&members);
    seen.insert(0);
    for (std::uint32_t i = 0; i < elems_.size() && members.size() < target; ++i) {
      if (!(elems_[i] * elems_[x] == elems_[x] * elems_[i])) continue;
      if (seen.find(elems_[i]) != npos32) continue;
      gens.push_back(elems_[i]);
      for (std::size_t qi = 0; qi < members.size(); ++qi) {
        for (const E& s : gens) {
          E y = members[qi] * s;
          if (seen.find(y) != npos32) continue;
          members.push_back(std::move(y));
          seen.insert(static_cast<std::uint32_t>(members.size() - 1));
        }
      }
    }
    if (gens.empty()) gens.push_back(elems_[id_]);
    return gens;
  }

  Fingerprint fingerprint() const {
    Fingerprint fp;
    fp.order = order();
    const ClassSet& cs = classes();
    fp.class_sizes = cs.sizes;
    std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint32_t i = 0; i < elems_.size(); ++i) ++hist[element_order(i)];
    fp.order_hist.assign(hist.begin(), hist.end());
    return fp;
  }

 private:
  std::vector<E> elems_;
  std::vector<E> gens_;
  IndexTable<E> table_;
  std::uint32_t id_ = 0;
  mutable std::unique_ptr<ClassSet> classes_;
};

// Subgroup of an enumerated parent, held as sorted member indices. group()
// materializes it as a standalone EnumeratedGroup when class data inside the
// subgroup is needed.
template <class E>
class Subgroup {
 public:
  static Subgroup from_generators(const EnumeratedGroup<E>& parent, std::vector<E> gens) {
    Subgroup s;
    s.parent_ = &parent;
    s.gens_ = gens;
    std::set<std::uint32_t> seen{parent.identity_index()};
    std::vector<std::uint32_t> work(seen.begin(), seen.end());
    for (const E& g : gens) parent.index_of(g);  // membership check up front
    for (std::size_t qi = 0; qi < work.size(); ++qi) {
      for (const E& g : gens) {
        std::uint32_t y = parent.index_of(parent.element(work[qi]) * g);
        if (seen.insert(y).second) work.push_back(y);
      }
    }
    s.members_.assign(seen.begin(), seen.end());
    return s;
  }

  // Validating constructor: checks the member set really is a subgroup.
  // Quadratic in the member count, meant for modest sizes.
  static Subgroup from_members(const EnumeratedGroup<E>& parent,
                               std::vector<std::uint32_t> members) {
    Subgroup s = from_members_trusted(parent, std::move(members));
    std::set<std::uint32_t> set(s.members_.begin(), s.members_.end());
    require(set.count(parent.identity_index()) == 1, Errc::NotASubgroup,
            "member set lacks the identity");
    for (std::uint32_t a : s.members_) {
      require(set.count(parent.inv(a)) == 1, Errc::NotASubgroup,
              "member set not closed under inversion");
      for (std::uint32_t b : s.members_)
        require(set.count(parent.mul(a, b)) == 1, Errc::NotASubgroup,
                "member set not closed under products");
    }
    return s;
  }

  // For callers that construct the member set by a closure of their own.
  static Subgroup from_members_trusted(const EnumeratedGroup<E>& parent,
                                       std::vector<std::uint32_t> members) {
    Subgroup s;
    s.parent_ = &parent;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    require(!members.empty(), Errc::NotASubgroup, "empty member set");
    s.members_ = std::move(members);
    return s;
  }

  const EnumeratedGroup<E>& parent() const { return *parent_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::uint64_t order() const { return members_.size(); }

  bool contains_index(std::uint32_t i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }
  bool contains(const E& e) const {
    std::uint32_t i = parent_->find(e);
    return i != npos32 && contains_index(i);
  }

  // Generators if the subgroup was built from them, otherwise all members.
  std::vector<E> generator_values() const {
    if (!gens_.empty()) return gens_;
    std::vector<E> out;
    for (std::uint32_t i : members_) out.push_back(parent_->element(i));
    return out;
  }

  bool is_normal() const {
    if (normal_ < 0) {
      bool ok = true;
      std::vector<E> hgens = generator_values();
      for (const E& s : parent_->generators()) {
        E si = s.inverse();
        for (const E& h : hgens) {
          if (!contains(si * h * s)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      normal_ = ok ? 1 : 0;
    }
    return normal_ == 1;
  }

  const EnumeratedGroup<E>& group() const {
    if (!mat_) {
      mat_ = std::make_shared<EnumeratedGroup<E>>(parent_->identity_element(),
                                                  generator_values());
      require(mat_->order() == order(), Errc::NotASubgroup,
              "generators escape the recorded member set");
    }
    return *mat_;
  }

 private:
  const EnumeratedGroup<E>* parent_ = nullptr;
  std::vector<std::uint32_t> members_;
  std::vector<E> gens_;
  mutable std::shared_ptr<EnumeratedGroup<E>> mat_;
  mutable int normal_ = -1;
};

template <class E>
Subgroup<E> whole_group(const EnumeratedGroup<E>& g) {
  std::vector<std::uint32_t> all(g.order());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup<E>::from_members_trusted(g, std::move(all));
}

// Smallest normal subgroup containing the seeds: close the seeds under
// conjugation first, then generate. A subgroup generated by a
// conjugation-closed set is normal.
template <class E>
Subgroup<E> normal_closure(const EnumeratedGroup<E>& g, const std::vector<E>& seeds) {
  std::set<std::uint32_t> conj_closed;
  std::vector<std::uint32_t> work;
  for (const E& e : seeds)
    if (conj_closed.insert(g.index_of(e)).second) work.push_back(g.index_of(e));
  for (std::size_t qi = 0; qi < work.size(); ++qi) {
    for (const E& s : g.generators()) {
      std::uint32_t y = g.index_of(s.inverse() * g.element(work[qi]) * s);
      if (conj_closed.insert(y).second) work.push_back(y);
    }
  }
  std::set<std::uint32_t> seen{g.identity_index()};
  std::vector<std::uint32_t> queue(seen.begin(), seen.end());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::uint32_t s : work) {
      std::uint32_t y = g.mul(queue[qi], s);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return Subgroup<E>::from_members_trusted(g, std::vector<std::uint32_t>(seen.begin(), seen.end()));
}

// Small generating set for a known member list: greedily keep the members
// that enlarge the generated set. Keeps later materialization of the subgroup
// linear in its order instead of quadratic.
template <class E>
std::vector<E> spanning_generators(const EnumeratedGroup<E>& parent,
                                   const std::vector<std::uint32_t>& members) {
  std::vector<E> gens;
  std::vector<char> in(parent.order(), 0);
  in[parent.identity_index()] = 1;
  std::vector<std::uint32_t> closure{parent.identity_index()};
  for (std::uint32_t m : members) {
    if (in[m]) continue;
    gens.push_back(parent.element(m));
    in[m] = 1;
    closure.push_back(m);
    for (std::size_t qi = 0; qi < closure.size(); ++qi) {
      for (const E& g : gens) {
        std::uint32_t y = parent.index_of(parent.element(closure[qi]) * g);
        if (!in[y]) {
          in[y] = 1;
          closure.push_back(y);
        }
      }
    }
  }
  if (gens.empty()) gens.push_back(parent.identity_element());
  return gens;
}

template <class E>
Subgroup<E> derived_subgroup(const EnumeratedGroup<E>& g) {
  std::vector<E> comms;
  for (const E& a : g.generators())
    for (const E& b : g.generators())
      comms.push_back(a.inverse() * b.inverse() * a * b);
  return normal_closure(g, comms);
}

template <class E>
Subgroup<E> center_subgroup(const EnumeratedGroup<E>& g) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    bool central = true;
    for (const E& s : g.generators())
      if (!(g.element(i) * s == s * g.element(i))) {
        central = false;
        break;
      }
    if (central) members.push_back(i);
  }
  return Subgroup<E>::from_members_trusted(g, std::move(members));
}

// Largest normal subgroup of g contained in h: the set of x whose whole
// conjugation orbit stays inside h.
template <class E>
Subgroup<E> core_of(const EnumeratedGroup<E>& g, const Subgroup<E>& h) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t x : h.members()) {
    bool stays = true;
    std::set<std::uint32_t> orbit{x};
    std::vector<std::uint32_t> work{x};
    for (std::size_t qi = 0; qi < work.size() && stays; ++qi) {
      for (const E& s : g.generators()) {
        std::uint32_t y = g.index_of(s.inverse() * g.element(work[qi]) * s);
        if (!h.contains_index(y)) {
          stays = false;
          break;
        }
        if (orbit.insert(y).second) work.push_back(y);
      }
    }
    if (stays) members.push_back(x);
  }
  return Subgroup<E>::from_members_trusted(g, std::move(members));
}

}  // namespace classbound
