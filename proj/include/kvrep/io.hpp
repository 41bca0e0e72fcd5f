#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "kvrep/abelian.hpp"
#include "kvrep/error.hpp"
#include "kvrep/group.hpp"
#include "kvrep/intertwine.hpp"
#include "kvrep/quadruple.hpp"
#include "kvrep/two_group.hpp"

namespace kvrep {

using Json = nlohmann::ordered_json;

/// Unreadable file, malformed JSON, or a document that does not fit the
/// schema. Mathematical invalidity is reported by the other error types.
class ParseError : public Error
{
public:
  using Error::Error;
};

Json load_json(const std::filesystem::path& path);
Json parse_json(const std::string& text);

// Group {"order": p, "table": [[...]]}.
FiniteGroup group_from_json(const Json& j, GroupOptions options = {});
Json to_json(const FiniteGroup& g);

// Abelian group {"cyclic": [m1, ...]}.
AbelianGroup abelian_from_json(const Json& j);
Json to_json(const AbelianGroup& a);

// Action {"perms": [[...], ...]}, one permutation of pi1 elements per pi0 element.
Pi1Action action_from_json(const Json& j, const FiniteGroup& pi0, const AbelianGroup& pi1);
Json to_json(const Pi1Action& a);

/// {"pi0", "pi1", "action", "alpha"}; action defaults to trivial, alpha to 0.
/// alpha is nested p x p x p with pi1 element indices.
TwoGroupData two_group_from_json(const Json& j, GroupOptions options = {});
Json to_json(const TwoGroupData& t);

/// {"n", "rho", "beta", "c"} with c nested p x p x n of "num/den" strings.
/// The 2-group comes from `t`, or from an embedded "two_group" object when
/// `t` is null.
RepQuadruple quadruple_from_json(const Json& j, TwoGroupPtr t, GroupOptions options = {});
Json to_json(const RepQuadruple& q, bool embed_two_group = false);

/// Nested arrays indexed by argument tuples; leaves are "num/den" strings
/// for rank one and arrays of them otherwise.
Json to_json(const QZCochain& c);
QZCochain qz_cochain_from_json(const Json& j, std::shared_ptr<const QZModule> module, int degree);

Json to_json(const HomReport& r);
Json to_json(const ValidationReport& r);

} // namespace kvrep
