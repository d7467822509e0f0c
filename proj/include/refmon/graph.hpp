#ifndef REFMON_GRAPH_HPP_
#define REFMON_GRAPH_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refmon/presentation.hpp"
#include "refmon/word_problem.hpp"

namespace refmon {

  struct Arrow {
    std::string name;
    std::string source;
    std::string range;
  };

  class DirectedGraph {
   public:
    DirectedGraph() = default;
    explicit DirectedGraph(std::string name) : _name(std::move(name)) {}

    std::string const& name() const noexcept {
      return _name;
    }
    void rename(std::string n) {
      _name = std::move(n);
    }
    std::vector<std::string> const& vertices() const noexcept {
      return _vertices;
    }
    std::vector<Arrow> const& arrows() const noexcept {
      return _arrows;
    }

    void addVertex(std::string v);
    // both endpoints must already exist
    void addArrow(std::string name, std::string const& src, std::string const& rng);

    bool                hasVertex(std::string_view v) const;
    Arrow const&        arrow(std::string_view name) const;
    bool                hasArrow(std::string_view name) const;
    // names of s^{-1}(v), in insertion order
    std::vector<std::string> outArrows(std::string_view v) const;
    bool                     isSink(std::string_view v) const {
      return outArrows(v).empty();
    }

   private:
    std::string                        _name;
    std::vector<std::string>           _vertices;
    std::vector<Arrow>                 _arrows;
    std::map<std::string, std::size_t, std::less<>> _vindex, _aindex;
  };

  using ArrowSet = std::vector<std::string>;

  // C_v partitions s^{-1}(v) for every vertex; sinks have no entry.
  struct SeparatedGraph {
    DirectedGraph                                         graph;
    std::map<std::string, std::vector<ArrowSet>, std::less<>> C;

    // throws Error unless every C_v is a partition of s^{-1}(v)
    void                         validate() const;
    std::vector<ArrowSet> const& classes(std::string_view v) const;
  };

  struct SSTriple {
    SeparatedGraph        sep;
    std::vector<ArrowSet> S;  // members of C

    void validate() const;
  };

  // An infinite emitter modelled by a finite listing of its arrows plus a
  // depth for the chain of new vertices.
  struct EmitterSpec {
    std::string              vertex;
    std::vector<std::string> arrows;
    std::size_t              depth = 1;
  };

  struct GraphSpec {
    SeparatedGraph           sep;
    bool                     separated = false;  // any separation line given
    std::vector<EmitterSpec> emitters;
  };

  // Line format:
  //   graph <name>
  //   vertices <id> ...
  //   arrow <id> <v> -> <w>
  //   separation <v> : {<arrow> ...} {<arrow> ...}
  //   emitter <v> : <arrow> ... depth <n>
  // Vertices without a separation line get C_v = {s^{-1}(v)}.
  GraphSpec   parseGraph(std::string_view text);
  std::string writeGraph(GraphSpec const& g);
  std::string writeGraph(SeparatedGraph const& g);

  SeparatedGraph unseparation(DirectedGraph const& g);

  // generators E^0, one relation v = sum r(e) per v and X in C_v
  Presentation presentFinitelySeparated(SeparatedGraph const& sg);

  // name of the generator q'_Z, e.g. "q__e1__e2"
  std::string qPrimeName(ArrowSet const& Z);

  // generators E^0 plus q'_Z for nonempty Z inside a member of C with
  // |Z| <= zCap (q'_X for X in S is always present)
  Presentation presentTriple(SSTriple const& t, std::size_t zCap = 3);

  // w_{v,n} vertex names, "w_v_n"
  std::string tildeVertexName(std::string_view v, std::size_t n);

  // Replaces each designated emitter v by a chain v -> w_{v,1} -> ... ->
  // w_{v,depth}; arrow e_{v,n+1} is re-sourced at w_{v,n}.
  DirectedGraph tildeConstruction(DirectedGraph const&            g,
                                  std::vector<EmitterSpec> const& emitters);

  // the presentation with generators E^0 and q_v_n (n <= depth) used for
  // comparison with M of the tilde graph
  Presentation emitterPresentation(DirectedGraph const&            g,
                                   std::vector<EmitterSpec> const& emitters);
  std::string  emitterGeneratorName(std::string_view v, std::size_t n);

  // true when no vertex is designated as an infinite emitter
  bool isRowFinite(GraphSpec const& g);

  enum class BuiltinGraph { E0C0, EC, EbarCbar };

  // N is ignored for E0C0 and must be >= 1 otherwise
  SeparatedGraph builtinGraph(BuiltinGraph which, std::size_t N = 1);

  // presentFinitelySeparated(builtinGraph(which, N)) against the level-N
  // truncation, with u -> x0 + y0 one way and the identity on the rest.
  EquivalenceReport compareWithTruncation(BuiltinGraph       which,
                                          std::size_t        N,
                                          std::uint64_t      sweepDegree,
                                          SearchBound const& bound);

  // M of the (unseparated) tilde graph against emitterPresentation under
  // w_v_n <-> q_v_n.
  EquivalenceReport compareTildeWithEmitters(DirectedGraph const&            g,
                                             std::vector<EmitterSpec> const& emitters,
                                             std::uint64_t      sweepDegree,
                                             SearchBound const& bound);

}  // namespace refmon

#endif  // REFMON_GRAPH_HPP_
