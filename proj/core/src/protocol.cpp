#include "specshare/protocol.hpp"

#include <algorithm>

#include "specshare/errors.hpp"

namespace specshare {

const char* message_kind_name(MessageKind kind) {
  switch (kind) {
    case MessageKind::ServiceRequest: return "ServiceRequest";
    case MessageKind::ChannelRequest: return "ChannelRequest";
    case MessageKind::NeighborBroadcast: return "NeighborBroadcast";
    case MessageKind::NeighborReply: return "NeighborReply";
    case MessageKind::AvailabilityResponse: return "AvailabilityResponse";
    case MessageKind::ServiceReply: return "ServiceReply";
  }
  return "?";
}

std::string node_ref_name(NodeRef ref) {
  const char* prefix = ref.kind == NodeRef::Kind::Mobile ? "mn"
                       : ref.kind == NodeRef::Kind::BaseStation ? "bs"
                                                                : "cr";
  return std::string(prefix) + ":" + std::to_string(ref.index);
}

CrNodeState::CrNodeState(int node_id, int n_channels, int history_window)
    : node_id_(node_id),
      n_channels_(n_channels),
      history_window_(std::max(history_window, 1)),
      free_(n_channels, 1),
      history_(static_cast<size_t>(n_channels) * static_cast<size_t>(history_window_), 0) {}

void CrNodeState::sense_sweep(const OccupancyState& occ, const std::vector<int>& cells_in_range,
                              double now, double p_false_free, double p_false_busy, Rng* rng) {
  (void)now;
  for (int ch = 0; ch < n_channels_; ++ch) {
    bool free = true;
    for (int cell : cells_in_range) {
      if (!occ.admissible(cell, ch)) {
        free = false;
        break;
      }
    }
    if (rng != nullptr && (p_false_free > 0.0 || p_false_busy > 0.0)) {
      if (!free && p_false_free > 0.0 && rng->uniform01() < p_false_free) free = true;
      else if (free && p_false_busy > 0.0 && rng->uniform01() < p_false_busy) free = false;
    }
    free_[ch] = free ? 1 : 0;
    history_[static_cast<size_t>(ch) * history_window_ + history_head_] = free_[ch];
  }
  history_head_ = (history_head_ + 1) % history_window_;
  ++sweeps_seen_;
}

bool CrNodeState::channel_free(int channel) const {
  ensure(channel >= 0 && channel < n_channels_, "cr: channel out of range");
  return free_[channel] != 0;
}

double CrNodeState::free_fraction(int channel) const {
  ensure(channel >= 0 && channel < n_channels_, "cr: channel out of range");
  const int seen = std::min(sweeps_seen_, history_window_);
  if (seen == 0) return channel_free(channel) ? 1.0 : 0.0;
  int free_count = 0;
  for (int i = 0; i < seen; ++i) {
    free_count += history_[static_cast<size_t>(channel) * history_window_ + i];
  }
  return static_cast<double>(free_count) / seen;
}

Message CrNodeState::build_response(const PendingRequest& req, long request_id, int self_id,
                                    const Topology& topo, bool partial, double now) const {
  Message resp;
  resp.kind = MessageKind::AvailabilityResponse;
  resp.src = {NodeRef::Kind::CrNode, self_id};
  resp.dst = {NodeRef::Kind::BaseStation, req.requester_cell};
  resp.request_id = request_id;
  resp.partial = partial;
  resp.timestamp = now;
  for (int ch = 0; ch < n_channels_; ++ch) {
    if (topo.channels[ch].owner == req.requester_provider) continue;
    resp.payload.push_back({ch, req.merged_free[ch] != 0, req.merged_fraction[ch]});
  }
  return resp;
}

CrEmission CrNodeState::handle_channel_request(const Message& request, const CrNode& self,
                                               const Topology& topo, double now) {
  ensure(request.dst.kind == NodeRef::Kind::CrNode && request.dst.index == node_id_,
         "cr: request not addressed to this node");
  CrEmission out;

  PendingRequest req;
  req.requester_cell = request.src.index;
  req.requester_provider = topo.cells[request.src.index].provider;
  req.expected_replies = static_cast<int>(self.neighbors.size());
  req.merged_free.assign(free_.begin(), free_.end());
  req.merged_fraction.resize(n_channels_);
  for (int ch = 0; ch < n_channels_; ++ch) req.merged_fraction[ch] = free_fraction(ch);

  if (req.expected_replies == 0) {
    // Degenerate topology: nothing to merge, respond with the local map.
    out.messages.push_back(build_response(req, request.request_id, node_id_, topo, false, now));
    return out;
  }

  for (int nb : self.neighbors) {
    Message bc;
    bc.kind = MessageKind::NeighborBroadcast;
    bc.src = {NodeRef::Kind::CrNode, node_id_};
    bc.dst = {NodeRef::Kind::CrNode, nb};
    bc.request_id = request.request_id;
    bc.timestamp = now;
    out.messages.push_back(std::move(bc));
  }
  pending_.emplace(request.request_id, std::move(req));
  out.arm_reply_timer = true;
  out.timer_request_id = request.request_id;
  return out;
}

CrEmission CrNodeState::handle_neighbor_broadcast(const Message& broadcast, int self_id,
                                                  double now) const {
  ensure(broadcast.dst.kind == NodeRef::Kind::CrNode && broadcast.dst.index == self_id,
         "cr: broadcast not addressed to this node");
  CrEmission out;
  Message reply;
  reply.kind = MessageKind::NeighborReply;
  reply.src = {NodeRef::Kind::CrNode, self_id};
  reply.dst = broadcast.src;
  reply.request_id = broadcast.request_id;
  reply.timestamp = now;
  for (int ch = 0; ch < n_channels_; ++ch) {
    reply.payload.push_back({ch, free_[ch] != 0, free_fraction(ch)});
  }
  out.messages.push_back(std::move(reply));
  return out;
}

CrEmission CrNodeState::handle_neighbor_reply(const Message& reply, const Topology& topo,
                                              double now) {
  CrEmission out;
  auto it = pending_.find(reply.request_id);
  if (it == pending_.end()) return out;  // context closed by timeout
  PendingRequest& req = it->second;

  // A channel stays available only when every contributor saw it free.
  for (const AvailabilityEntry& e : reply.payload) {
    ensure(e.channel_id >= 0 && e.channel_id < n_channels_, "cr: reply channel out of range");
    if (!e.available) req.merged_free[e.channel_id] = 0;
    req.merged_fraction[e.channel_id] = std::min(req.merged_fraction[e.channel_id],
                                                 e.free_fraction);
  }
  ++req.replies_received;
  if (req.replies_received >= req.expected_replies) {
    out.messages.push_back(build_response(req, reply.request_id, node_id_, topo, false, now));
    pending_.erase(it);
  }
  return out;
}

CrEmission CrNodeState::handle_reply_timeout(long request_id, const Topology& topo, double now) {
  CrEmission out;
  auto it = pending_.find(request_id);
  if (it == pending_.end()) return out;  // already answered
  out.messages.push_back(build_response(it->second, request_id, node_id_, topo, true, now));
  pending_.erase(it);
  return out;
}

bool BsState::overloaded(const OccupancyState& occ, const Topology& topo) const {
  return !first_admissible_owned(occ, topo).has_value();
}

std::optional<int> BsState::first_admissible_owned(const OccupancyState& occ,
                                                   const Topology& topo) const {
  for (int ch : topo.providers[provider_].licensed_channels) {
    if (occ.admissible(cell_, ch)) return ch;
  }
  return std::nullopt;
}

std::optional<int> BsState::first_admissible_borrowed(const OccupancyState& occ) const {
  for (int ch : borrowed_) {
    if (occ.admissible(cell_, ch)) return ch;
  }
  return std::nullopt;
}

std::vector<Message> BsState::handle_overload(const Topology& topo, long request_id, long call_id,
                                              double now) {
  ensure(!episode_.has_value(), "bs: overload trigger while a request is pending");
  Episode ep;
  ep.request_id = request_id;
  ep.start_time = now;
  ep.queued_calls.push_back(call_id);

  std::vector<Message> requests;
  for (int node : topo.cells[cell_].corner_nodes) {
    Message msg;
    msg.kind = MessageKind::ChannelRequest;
    msg.src = {NodeRef::Kind::BaseStation, cell_};
    msg.dst = {NodeRef::Kind::CrNode, node};
    msg.request_id = request_id;
    msg.call_id = call_id;
    msg.timestamp = now;
    requests.push_back(std::move(msg));
  }
  ep.responses_expected = static_cast<int>(requests.size());
  episode_ = std::move(ep);
  return requests;
}

void BsState::enqueue_pending_call(long call_id) {
  ensure(episode_.has_value(), "bs: no episode to queue on");
  episode_->queued_calls.push_back(call_id);
}

bool BsState::handle_availability_response(const Message& response) {
  ensure(episode_.has_value() && response.request_id == episode_->request_id,
         "bs: response without a pending request");
  episode_->responses.push_back(response);
  return static_cast<int>(episode_->responses.size()) >= episode_->responses_expected;
}

std::vector<ChannelCandidate> BsState::collect_candidates(const Topology& topo, double cost,
                                                          int* universe_size) const {
  ensure(episode_.has_value(), "bs: no episode to collect from");
  const int n_channels = topo.n_channels();
  std::vector<uint8_t> available(n_channels, 0);
  std::vector<double> fraction(n_channels, 0.0);
  int universe = 0;
  for (const Channel& ch : topo.channels) {
    if (ch.owner != provider_) ++universe;
  }
  for (const Message& resp : episode_->responses) {
    for (const AvailabilityEntry& e : resp.payload) {
      if (topo.channels[e.channel_id].owner == provider_) continue;
      if (e.available) {
        available[e.channel_id] = 1;
        fraction[e.channel_id] = std::max(fraction[e.channel_id], e.free_fraction);
      }
    }
  }
  std::vector<ChannelCandidate> candidates;
  for (int ch = 0; ch < n_channels; ++ch) {
    if (!available[ch]) continue;
    candidates.push_back({ch, topo.channels[ch].center_freq_hz, true, fraction[ch], cost});
  }
  if (universe_size != nullptr) *universe_size = universe;
  return candidates;
}

std::vector<long> BsState::take_pending_calls() {
  ensure(episode_.has_value(), "bs: no episode");
  return std::move(episode_->queued_calls);
}

void BsState::close_episode() { episode_.reset(); }

bool BsState::remove_pending_call(long call_id) {
  if (!episode_) return false;
  auto& q = episode_->queued_calls;
  auto it = std::find(q.begin(), q.end(), call_id);
  if (it == q.end()) return false;
  q.erase(it);
  return true;
}

void BsState::register_borrowed(int channel) {
  auto it = std::lower_bound(borrowed_.begin(), borrowed_.end(), channel);
  if (it == borrowed_.end() || *it != channel) borrowed_.insert(it, channel);
}

bool BsState::is_borrowed(int channel) const {
  return std::binary_search(borrowed_.begin(), borrowed_.end(), channel);
}

std::vector<int> BsState::release_borrowed(const OccupancyState& occ, const Topology& topo) {
  std::vector<int> released;
  if (borrowed_.empty()) return released;
  // No preemption: a borrowed channel carrying calls is retained. Owned
  // capacity must again cover new demand before idle borrows are returned.
  if (!first_admissible_owned(occ, topo).has_value()) return released;
  std::vector<int> kept;
  for (int ch : borrowed_) {
    if (occ.count(cell_, ch) == 0) {
      released.push_back(ch);
    } else {
      kept.push_back(ch);
    }
  }
  borrowed_ = std::move(kept);
  return released;
}

}  // namespace specshare
