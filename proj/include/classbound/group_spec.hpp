#pragma once

#include <fstream>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "classbound/matrix_group.hpp"
#include "classbound/perm_groups.hpp"

namespace classbound {

// A group description loaded from a JSON spec file. Permutation kinds fill
// `perm`; "matrix-gfp" fills `matrix` and, when the spec carries a "module"
// object, flags the affine interpretation.
struct GroupSpec {
  std::string kind;
  std::shared_ptr<PermGroup> perm;
  std::optional<MatrixGroup> matrix;
  bool has_module = false;
  uint32_t module_p = 0;
  uint32_t module_dim = 0;
};

namespace detail {

inline const nlohmann::json& spec_field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  require(it != j.end(), Errc::IoError, std::string("group spec is missing \"") + key + "\"");
  return *it;
}

inline uint64_t spec_uint(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = spec_field(j, key);
  require(v.is_number_unsigned() || (v.is_number_integer() && v.get<int64_t>() >= 0),
          Errc::IoError, std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<uint64_t>();
}

}  // namespace detail

inline GroupSpec build_group_spec(const nlohmann::json& j) {
  GroupSpec out;
  require(j.is_object(), Errc::IoError, "group spec must be a JSON object");
  out.kind = detail::spec_field(j, "kind").get<std::string>();
  auto params = [&]() -> const nlohmann::json& { return detail::spec_field(j, "params"); };

  if (out.kind == "symmetric") {
    out.perm = std::make_shared<PermGroup>(symmetric_group(detail::spec_uint(params(), "n")));
  } else if (out.kind == "cyclic") {
    out.perm = std::make_shared<PermGroup>(cyclic_group(detail::spec_uint(params(), "n")));
  } else if (out.kind == "dihedral") {
    out.perm = std::make_shared<PermGroup>(dihedral_group(detail::spec_uint(params(), "n")));
  } else if (out.kind == "frobenius") {
    out.perm = std::make_shared<PermGroup>(
        frobenius_group(detail::spec_uint(params(), "q"), detail::spec_uint(params(), "p")));
  } else if (out.kind == "wreath") {
    GroupSpec base = build_group_spec(detail::spec_field(params(), "base"));
    GroupSpec top = build_group_spec(detail::spec_field(params(), "top"));
    require(base.perm && top.perm, Errc::IoError,
            "wreath base and top must both be permutation group specs");
    out.perm = std::make_shared<PermGroup>(wreath_product(*base.perm, *top.perm));
  } else if (out.kind == "explicit-perm") {
    std::size_t degree = detail::spec_uint(params(), "degree");
    std::vector<Permutation> gens;
    for (const nlohmann::json& s : detail::spec_field(j, "generators")) {
      require(s.is_string(), Errc::IoError, "explicit-perm generators are cycle strings");
      gens.push_back(Permutation::from_cycles(degree, s.get<std::string>()));
    }
    out.perm =
        std::make_shared<PermGroup>(Permutation::identity(degree), std::move(gens));
  } else if (out.kind == "matrix-gfp") {
    uint32_t p = static_cast<uint32_t>(detail::spec_uint(j, "p"));
    uint32_t dim = static_cast<uint32_t>(detail::spec_uint(j, "dim"));
    std::vector<GfMatrix> gens;
    for (const nlohmann::json& rows : detail::spec_field(j, "generators")) {
      require(rows.is_array(), Errc::IoError, "matrix generators are arrays of residues");
      std::vector<int> flat;
      for (const nlohmann::json& x : rows) flat.push_back(x.get<int>());
      gens.push_back(GfMatrix::from_rows(p, dim, flat));
    }
    if (j.contains("blocks")) {
      // Generators describe the per-block group; the instance is induced
      // inside the wreath over a cyclic block action.
      uint32_t blocks = static_cast<uint32_t>(detail::spec_uint(j, "blocks"));
      uint64_t mixing = j.contains("mixing-seed") ? detail::spec_uint(j, "mixing-seed") : 0;
      MatrixGroup h1 = matrix_group(p, dim, std::move(gens));
      out.matrix = induced_block_group(h1, cyclic_group(blocks), mixing);
    } else {
      out.matrix = matrix_group(p, dim, std::move(gens));
    }
    if (j.contains("module")) {
      const nlohmann::json& m = j["module"];
      out.has_module = true;
      out.module_p = static_cast<uint32_t>(detail::spec_uint(m, "p"));
      out.module_dim = static_cast<uint32_t>(detail::spec_uint(m, "dim"));
      require(out.module_p == out.matrix->p && out.module_dim == out.matrix->d,
              Errc::IoError, "module shape must match the matrix group");
    }
  } else {
    fail(Errc::IoError, "unknown group spec kind \"" + out.kind + "\"");
  }
  return out;
}

inline GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), Errc::IoError, "cannot open group spec " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::IoError, std::string("group spec is not valid JSON: ") + e.what());
  }
  return build_group_spec(j);
}

}  // namespace classbound
