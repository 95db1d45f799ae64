#pragma once

#include <stdexcept>
#include <string>

namespace ortho {

// Raised for malformed instance documents; carries a location hint.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, const std::string& where_hint = "")
      : std::runtime_error(where_hint.empty() ? message : message + " (at " + where_hint + ")"),
        where_(where_hint) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Raised when a pipeline stage fails; carries the stage name.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(const std::string& stage, const std::string& message)
      : std::runtime_error("[" + stage + "] " + message), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// An edge whose ports cannot be connected in the routing graph.
class RoutingError : public PipelineError {
 public:
  RoutingError(const std::string& edge_id, const std::string& message)
      : PipelineError("edge-routing", "edge '" + edge_id + "': " + message),
        edge_id_(edge_id) {}
  const std::string& edge_id() const { return edge_id_; }

 private:
  std::string edge_id_;
};

// Routing-graph construction produced an unroutable port.
class ConstructionError : public PipelineError {
 public:
  explicit ConstructionError(const std::string& message)
      : PipelineError("routing-graph", message) {}
};

// A violated internal invariant (e.g. an infeasible LP we built ourselves).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& message) : std::logic_error(message) {}
};

}  // namespace ortho
