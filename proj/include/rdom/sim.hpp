#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdom/error.hpp"
#include "rdom/exec.hpp"
#include "rdom/graph.hpp"
#include "rdom/io.hpp"
#include "rdom/message.hpp"

namespace rdom {

enum class ModelKind { local, congest, congest_bc };

std::string to_string(ModelKind kind);
/// Accepts "local", "congest", "congest_bc" (case-insensitive). Throws InvalidArgument.
ModelKind parse_model(const std::string& name);

/// Communication model. For the CONGEST variants every message must fit in
/// kappa * ceil(log2 n) bits under the canonical encoding.
struct SimModel {
  ModelKind kind = ModelKind::congest_bc;
  double kappa = 64;

  static SimModel local() { return {ModelKind::local, 0}; }
  static SimModel congest(double kappa = 64) { return {ModelKind::congest, kappa}; }
  static SimModel congest_bc(double kappa = 64) { return {ModelKind::congest_bc, kappa}; }

  /// Per-message cap in bits; nullopt for LOCAL.
  std::optional<std::size_t> cap_bits(std::size_t n) const;
};

/// Default kappa: the RDOM_KAPPA environment variable if set, else 64.
double default_kappa();

/// A message that broke the model: wrong delivery mode or destination.
class ModelViolation : public Error {
 public:
  ModelViolation(const std::string& what, Vertex vertex, int round)
      : Error(what), vertex_(vertex), round_(round) {}
  Vertex vertex() const noexcept { return vertex_; }
  int round() const noexcept { return round_; }

 private:
  Vertex vertex_;
  int round_;
};

/// A message above the bandwidth cap.
class BandwidthViolation : public ModelViolation {
 public:
  BandwidthViolation(const std::string& what, Vertex vertex, int round, std::size_t bits, std::size_t cap)
      : ModelViolation(what, vertex, round), bits_(bits), cap_(cap) {}
  std::size_t bits() const noexcept { return bits_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t bits_;
  std::size_t cap_;
};

struct Envelope {
  Vertex from;
  std::shared_ptr<const Message> message;
};

/// What a vertex sends in one round: at most one broadcast to all
/// neighbours, plus unicasts addressed to individual neighbours.
struct Outbox {
  std::optional<Message> broadcast;
  std::vector<std::pair<Vertex, Message>> unicast;
  bool empty() const noexcept { return !broadcast && unicast.empty(); }
};

/// Initial knowledge of a vertex.
struct LocalInput {
  Vertex self;
  ExternalId id;
  std::size_t n;
  std::span<const Vertex> neighbors;
};

/// Per-vertex state machine. In round t the engine calls send(t) on every
/// running vertex, delivers, then calls receive(t, inbox) with the inbox
/// sorted by sender. A vertex stops taking part once halted() is true.
class VertexProcess {
 public:
  virtual ~VertexProcess() = default;
  virtual Outbox send(int round) = 0;
  virtual void receive(int round, std::span<const Envelope> inbox) = 0;
  virtual bool halted() const = 0;
  virtual Json output() const = 0;
};

using ProcessFactory = std::function<std::unique_ptr<VertexProcess>(const LocalInput&)>;

struct RoundRecord {
  int round = 0;
  std::string phase;
  std::size_t active = 0;      // vertices that were running at the start of the round
  std::size_t messages = 0;    // broadcasts and unicasts sent
  std::size_t deliveries = 0;  // inbox entries created
  std::size_t max_bits = 0;
  std::size_t total_bits = 0;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct RoundTrace {
  std::vector<RoundRecord> rounds;

  std::size_t total_rounds() const noexcept { return rounds.size(); }
  std::size_t max_bits() const noexcept;
  std::size_t total_bits() const noexcept;
  std::size_t rounds_in_phase(const std::string& phase) const noexcept;

  /// One JSON object per line.
  std::string to_jsonl() const;
  friend bool operator==(const RoundTrace&, const RoundTrace&) = default;
};

Json round_record_to_json(const RoundRecord& record);

struct RunOptions {
  int max_rounds = 100000;
  Exec exec = Exec::parallel;
  /// Order in which send/receive are invoked in serial mode; empty means by
  /// index. Results do not depend on it.
  std::vector<Vertex> step_order;
  /// Label recorded for each round in the trace.
  std::function<std::string(int round)> phase_label;
};

struct RunResult {
  RoundTrace trace;
  bool terminated = false;  // every vertex halted within max_rounds
  std::vector<std::unique_ptr<VertexProcess>> processes;

  /// {id: output} for every vertex, keyed by external id.
  Json outputs(const Graph& g) const;
};

/// Runs the synchronous rounds until every vertex has halted or `max_rounds`
/// rounds have been executed. Throws ModelViolation / BandwidthViolation
/// naming the offending vertex (external id), round and bit count.
RunResult run(const Graph& g, const SimModel& model, const ProcessFactory& factory, const RunOptions& options = {});

}  // namespace rdom
