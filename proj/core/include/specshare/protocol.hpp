#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specshare/rng.hpp"
#include "specshare/sbac.hpp"
#include "specshare/world.hpp"

namespace specshare {

enum class MessageKind {
  ServiceRequest,
  ChannelRequest,
  NeighborBroadcast,
  NeighborReply,
  AvailabilityResponse,
  ServiceReply,
};

const char* message_kind_name(MessageKind kind);

struct NodeRef {
  enum class Kind { Mobile, BaseStation, CrNode };
  Kind kind = Kind::Mobile;
  int index = 0;
};

std::string node_ref_name(NodeRef ref);

struct AvailabilityEntry {
  int channel_id = 0;
  bool available = false;
  double free_fraction = 0.0;  // share of recent sweeps in which the channel was free
};

struct Message {
  MessageKind kind = MessageKind::ServiceRequest;
  NodeRef src;
  NodeRef dst;
  long request_id = -1;
  long call_id = -1;
  int channel = -1;  // granted channel on ServiceReply, -1 when blocked
  bool partial = false;
  std::vector<AvailabilityEntry> payload;
  double timestamp = 0.0;  // send time
};

struct ProtocolTimings {
  double message_latency_s = 0.005;
  double reply_timeout_s = 0.05;
  double sensing_period_s = 1.0;
  double pending_timeout_s = 0.2;
  double sensing_false_free = 0.0;  // error-hook probabilities, 0 = perfect sensing
  double sensing_false_busy = 0.0;
};

// What a handler wants sent (engine adds message latency) and whether a reply
// timer should be armed for the new request context.
struct CrEmission {
  std::vector<Message> messages;
  bool arm_reply_timer = false;
  long timer_request_id = -1;
};

// One CR node: the availability map from the last sweep, a sliding free
// history per channel, and open request contexts awaiting neighbour replies.
class CrNodeState {
 public:
  CrNodeState(int node_id, int n_channels, int history_window);

  // Availability from ground truth: a channel is free iff it could be
  // admitted in every cell within sensing range. The optional error hook
  // flips results with the given probabilities.
  void sense_sweep(const OccupancyState& occ, const std::vector<int>& cells_in_range, double now,
                   double p_false_free = 0.0, double p_false_busy = 0.0, Rng* rng = nullptr);

  bool channel_free(int channel) const;
  double free_fraction(int channel) const;
  int sweeps_seen() const { return sweeps_seen_; }

  CrEmission handle_channel_request(const Message& request, const CrNode& self,
                                    const Topology& topo, double now);
  CrEmission handle_neighbor_broadcast(const Message& broadcast, int self_id, double now) const;
  CrEmission handle_neighbor_reply(const Message& reply, const Topology& topo, double now);
  CrEmission handle_reply_timeout(long request_id, const Topology& topo, double now);

  int open_requests() const { return static_cast<int>(pending_.size()); }

 private:
  struct PendingRequest {
    int requester_cell = 0;
    int requester_provider = 0;
    int expected_replies = 0;
    int replies_received = 0;
    std::vector<uint8_t> merged_free;      // intersection over self + replies
    std::vector<double> merged_fraction;   // min over contributors
  };

  Message build_response(const PendingRequest& req, long request_id, int self_id,
                         const Topology& topo, bool partial, double now) const;

  int node_id_;
  int n_channels_;
  int history_window_;
  std::vector<uint8_t> free_;
  std::vector<uint8_t> history_;  // ring, n_channels * history_window
  int history_head_ = 0;
  int sweeps_seen_ = 0;
  std::map<long, PendingRequest> pending_;
};

// Base-station side: borrowed-channel registry plus the single in-flight
// borrow episode with its queued calls.
class BsState {
 public:
  BsState(int cell, int provider) : cell_(cell), provider_(provider) {}

  int cell() const { return cell_; }
  int provider() const { return provider_; }

  bool overloaded(const OccupancyState& occ, const Topology& topo) const;
  std::optional<int> first_admissible_owned(const OccupancyState& occ,
                                            const Topology& topo) const;
  std::optional<int> first_admissible_borrowed(const OccupancyState& occ) const;

  bool has_pending() const { return episode_.has_value(); }
  long pending_request_id() const { return episode_ ? episode_->request_id : -1; }

  // Emits one ChannelRequest per corner CR node; requires an overloaded BS
  // and no open episode. The triggering call is queued on the new episode.
  std::vector<Message> handle_overload(const Topology& topo, long request_id, long call_id,
                                       double now);

  // Queue another call on the open episode (duplicate trigger suppressed).
  void enqueue_pending_call(long call_id);

  // Returns true once every asked CR node has responded.
  bool handle_availability_response(const Message& response);

  // Union of the collected responses as scoring candidates, restricted to
  // channels the requester does not own. universe_size is the borrowable
  // channel universe used for the global availability ratio.
  std::vector<ChannelCandidate> collect_candidates(const Topology& topo, double cost,
                                                   int* universe_size) const;

  std::vector<long> take_pending_calls();
  std::vector<Message> responses() const { return episode_ ? episode_->responses : std::vector<Message>{}; }
  void close_episode();

  bool remove_pending_call(long call_id);

  void register_borrowed(int channel);
  bool is_borrowed(int channel) const;
  const std::vector<int>& borrowed() const { return borrowed_; }

  // Borrowed channels that are idle in this cell while owned capacity again
  // suffices are dropped from the registry and returned.
  std::vector<int> release_borrowed(const OccupancyState& occ, const Topology& topo);

 private:
  struct Episode {
    long request_id = -1;
    double start_time = 0.0;
    int responses_expected = 0;
    std::vector<Message> responses;
    std::vector<long> queued_calls;
  };

  int cell_;
  int provider_;
  std::vector<int> borrowed_;  // sorted
  std::optional<Episode> episode_;
};

}  // namespace specshare
