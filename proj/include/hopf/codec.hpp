#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "hopf/config.hpp"
#include "hopf/covers.hpp"
#include "hopf/elliptic.hpp"
#include "hopf/factor.hpp"
#include "hopf/manifold.hpp"
#include "hopf/picard.hpp"
#include "hopf/projective.hpp"
#include "hopf/rank2.hpp"
#include "hopf/spectral.hpp"
#include "hopf/stability.hpp"

namespace hopf::codec {

using json = nlohmann::json;

// Decoders throw ParseError naming the JSON path of the offending value.

json encode(std::complex<double> z);
std::complex<double> decode_complex(const json& j, const std::string& path = "$");

json encode(const Factor& f);
Factor decode_factor(const json& j, const std::string& path = "$");

json encode(const HopfManifold& X);
HopfManifold decode_manifold(const json& j, const Config& cfg = {}, const std::string& path = "$");

json encode(const P1Point& p);
P1Point decode_p1(const json& j, const std::string& path = "$");

json encode(const JumpRecord& r);
JumpRecord decode_jump(const json& j, const std::string& path = "$");

// Bundle descriptor; the manifold is supplied separately.
json encode(const FiltrableRank2& E);
FiltrableRank2 decode_bundle(const json& j, const HopfManifold& X, const std::string& path = "$");

json encode(const GraphData& g);
GraphData decode_graph(const json& j, const std::string& path = "$");

json encode(const Annulus& a);
json encode(const StabilityVerdict& v);
json encode(const Parametrization& p);
json encode(const ModuliDescriptor& m);
json encode(const C2OneParameters& c);
json encode(const CoverDescriptor& c);
json encode(const GroupDescriptor& g);
json encode(const HomologyTable& h);
json encode(const Pushforward& p);
json encode(const RuledClass& c);
json encode(const SpectralCover& s);
json encode(const LeafLabel& l);
json encode(const SplittingType& st);
json encode(const HigherExtensionType& t);
json encode(const HigherSpectral& h);
json encode(const EllipticPic& p);
json encode(const CohomologyVector& h);

json meta(const Config& cfg);

json parse_text(const std::string& text, const std::string& source);

}  // namespace hopf::codec
