#include "rfwsn/sim/simulator.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rfwsn/rng.hpp"
#include "rfwsn/sim/radio_timeline.hpp"

namespace rfwsn::sim {

using energy::RadioState;
using routing::Frame;

std::int64_t NodeLedger::total_ns() const {
  return std::accumulate(state_ns.begin(), state_ns.end(), std::int64_t{0});
}

std::uint64_t RunCounters::packets_dropped_total() const {
  return std::accumulate(packets_dropped.begin(), packets_dropped.end(), std::uint64_t{0});
}

harvest::HarvestCurve resolve_curve(const HarvestSetup& setup) {
  if (setup.curve_file.empty()) return harvest::embedded_curve(setup.receiver, setup.antenna);
  for (auto& c : harvest::load_curves_file(setup.curve_file)) {
    if (c.receiver() == setup.receiver && c.antenna() == setup.antenna) return c;
  }
  throw std::invalid_argument("curve file " + setup.curve_file + " has no " +
                              std::string(harvest::to_string(setup.receiver)) + "/" +
                              std::string(harvest::to_string(setup.antenna)) + " curve");
}

namespace {

// Independent random streams under one scenario seed.
enum Stream : std::uint64_t {
  kTopologyStream = 0,
  kTrafficStream = 1,
  kAntStream = 2,
  kProtocolStream = 3
};

struct Event {
  SimTime time;
  EventKind kind;
  NodeId node;
  std::uint64_t seq;
  NodeId from = kNoNode;
  Frame frame;
};

// Heap order: earliest first, then kind priority, node id, insertion order.
struct Later {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    if (a.kind != b.kind) return a.kind > b.kind;
    if (a.node != b.node) return a.node > b.node;
    return a.seq > b.seq;
  }
};

struct NodeRuntime {
  energy::Battery battery;
  RadioTimeline radio;
  NodeLedger ledger;
  double harvest_current_ua = 0.0;
  bool alive = true;
};

class Simulator;

class View final : public routing::NetworkView {
 public:
  explicit View(Simulator& sim) : sim_(sim) {}
  SimTime now() const override;
  NodeId sink() const override;
  const routing::Adjacency& adjacency() const override;
  bool alive(NodeId node) const override;
  double residual(NodeId node) const override;

 private:
  Simulator& sim_;
};

class Simulator {
 public:
  Simulator(const Scenario& scenario, const Topology& topology);
  RunResult run();

  SimTime now() const { return now_; }
  NodeId sink() const { return scenario_.sink(); }
  const routing::Adjacency& adjacency() const { return topology_.adjacency; }
  bool alive(NodeId n) {
    settle(n, now_);
    return nodes_[n].alive;
  }
  double residual(NodeId n) {
    settle(n, now_);
    return energy::residual_fraction(nodes_[n].battery);
  }

 private:
  void schedule(SimTime t, EventKind kind, NodeId node, NodeId from = kNoNode, Frame frame = {});
  void settle(NodeId n, SimTime t);
  void apply(routing::Effects& fx);
  void transmit(const routing::Transmission& tx);
  SimTime airtime(const Frame& f) const;
  SimTime overhear_time(const Frame& f) const;

  void on_transmission_complete(Event& ev);
  void on_cbr(NodeId n);
  void on_ant_launch(NodeId n);
  void on_harvest_tick();
  void on_metric_sample();
  void deliver(const routing::DataPacket& pkt);

  Scenario scenario_;
  Topology topology_;
  std::vector<NodeRuntime> nodes_;
  std::unique_ptr<routing::Protocol> protocol_;
  View view_;
  Rng traffic_rng_;
  Rng protocol_rng_;

  std::vector<Event> heap_;
  std::uint64_t next_seq_ = 0;
  SimTime now_;
  SimTime horizon_;
  SimTime cbr_interval_, ant_interval_, harvest_tick_, sample_interval_, processing_;

  RunResult result_;
  std::vector<std::uint32_t> next_message_;
  std::map<std::uint64_t, std::vector<routing::DataPart>> reassembly_;
};

SimTime View::now() const { return sim_.now(); }
NodeId View::sink() const { return sim_.sink(); }
const routing::Adjacency& View::adjacency() const { return sim_.adjacency(); }
bool View::alive(NodeId node) const { return sim_.alive(node); }
double View::residual(NodeId node) const { return sim_.residual(node); }

Simulator::Simulator(const Scenario& scenario, const Topology& topology)
    : scenario_(scenario),
      topology_(topology),
      protocol_(routing::make_protocol(scenario.protocol, scenario.protocol_params,
                                       scenario.baseline_overhear)),
      view_(*this),
      traffic_rng_(derive_seed(scenario.seed, kTrafficStream)),
      protocol_rng_(derive_seed(scenario.seed, kProtocolStream)) {
  horizon_ = SimTime::from_seconds(scenario.duration_s);
  cbr_interval_ = SimTime::from_seconds(scenario.cbr_interval_s);
  ant_interval_ = scenario.protocol_params.ant_interval;
  harvest_tick_ = SimTime::from_seconds(scenario.harvest_tick_s);
  sample_interval_ = SimTime::from_seconds(scenario.sample_interval_s);
  processing_ = SimTime::from_seconds(scenario.processing_time_s);

  std::optional<harvest::HarvestCurve> curve;
  if (scenario.harvesting.enabled) curve = resolve_curve(scenario.harvesting);
  const Position source{scenario.harvesting.x_m, scenario.harvesting.y_m};

  nodes_.reserve(scenario.node_count);
  for (NodeId id = 0; id < scenario.node_count; ++id) {
    NodeRuntime rt{scenario.battery_template(), {}, {}, 0.0, true};
    if (curve) {
      const double d_ft = harvest::meters_to_feet(distance(topology.positions[id], source));
      rt.harvest_current_ua = curve->at(d_ft).current_ua;
    }
    rt.alive = !rt.battery.depleted();
    if (!rt.alive) rt.ledger.depleted_at_ns = 0;
    nodes_.push_back(std::move(rt));
  }
  next_message_.assign(scenario.node_count, 0);
}

void Simulator::schedule(SimTime t, EventKind kind, NodeId node, NodeId from, Frame frame) {
  heap_.push_back(Event{t, kind, node, next_seq_++, from, std::move(frame)});
  std::push_heap(heap_.begin(), heap_.end(), Later{});
}

void Simulator::settle(NodeId n, SimTime t) {
  NodeRuntime& rt = nodes_[n];
  rt.radio.settle(t, [&](RadioState state, std::int64_t ns) {
    rt.ledger.state_ns[static_cast<std::size_t>(state)] += ns;
    if (!rt.alive || ns == 0) return;
    const double before = rt.battery.charge_mah();
    rt.battery = energy::drain(rt.battery, scenario_.consumption, state,
                               static_cast<double>(ns) * 1e-9);
    rt.ledger.drawn_mah += before - rt.battery.charge_mah();
    if (rt.battery.depleted()) {
      rt.alive = false;
      rt.ledger.depleted_at_ns = rt.radio.settled_until().ns();
    }
  });
}

SimTime Simulator::airtime(const Frame& f) const {
  // A CBR packet of packet_size bits travels as part_count data parts.
  double bits = scenario_.control_packet_bits;
  if (const auto* pkt = std::get_if<routing::DataPacket>(&f)) {
    bits = scenario_.packet_size_bits / std::max<double>(1.0, pkt->part_count);
  }
  return SimTime::from_seconds(bits / scenario_.data_rate_bps);
}

SimTime Simulator::overhear_time(const Frame& f) const {
  if (protocol_->overhear_policy() == routing::OverhearPolicy::FullFrame) return airtime(f);
  return SimTime::from_seconds(
      std::min(scenario_.header_bits, scenario_.packet_size_bits) / scenario_.data_rate_bps);
}

void Simulator::transmit(const routing::Transmission& tx) {
  const NodeId s = tx.from;
  if (!alive(s)) {
    if (routing::is_data(tx.frame)) {
      const auto reason = static_cast<std::size_t>(routing::DropReason::NodeDepleted);
      ++result_.counters.packets_dropped[reason];
    }
    return;
  }
  const bool broadcast = tx.to == routing::kBroadcast;
  std::vector<NodeId> receivers;
  if (broadcast) {
    for (const NodeId n : topology_.adjacency[s]) {
      if (alive(n)) receivers.push_back(n);
    }
  } else {
    receivers.push_back(tx.to);
  }

  SimTime start = std::max(now_, nodes_[s].radio.busy_until());
  for (const NodeId r : receivers) start = std::max(start, nodes_[r].radio.busy_until());
  const SimTime tx_start = start + processing_;
  const SimTime tx_end = tx_start + airtime(tx.frame);

  nodes_[s].radio.book(start, tx_start, RadioState::Idle);
  nodes_[s].radio.book(tx_start, tx_end, RadioState::Tx);
  for (const NodeId r : receivers) {
    nodes_[r].radio.book(tx_start, tx_end, RadioState::Rx);
    schedule(tx_end, EventKind::TransmissionComplete, r, s, tx.frame);
  }
  if (!broadcast) {
    const SimTime listen_end = tx_start + std::min(overhear_time(tx.frame), tx_end - tx_start);
    for (const NodeId m : topology_.adjacency[s]) {
      if (m == tx.to || !alive(m) || !nodes_[m].radio.idle_at(tx_start)) continue;
      nodes_[m].radio.book(tx_start, listen_end, RadioState::Rx);
    }
  }
  ++result_.counters.frames_sent;
}

void Simulator::apply(routing::Effects& fx) {
  RunCounters& c = result_.counters;
  c.ants_launched += fx.ants_launched;
  c.ants_arrived += fx.ants_arrived;
  c.ants_completed += fx.ants_completed;
  c.ants_eliminated += fx.ants_eliminated;
  c.ants_lost += fx.ants_lost;
  c.deposit_clamps += fx.deposit_clamps;
  for (const auto r : fx.drops) ++c.packets_dropped[static_cast<std::size_t>(r)];
  for (const auto& pkt : fx.delivered) deliver(pkt);
  for (const auto& [node, t] : fx.timers) schedule(t, EventKind::RecordTimeout, node);
  for (const auto& tx : fx.sends) transmit(tx);
}

void Simulator::deliver(const routing::DataPacket& pkt) {
  RunCounters& c = result_.counters;
  ++c.packets_delivered;
  const std::uint64_t key = routing::seqno::message_key(pkt.sequence_number);
  auto& parts = reassembly_[key];
  parts.push_back({pkt.part_index, pkt.part_count, pkt.payload});
  if (parts.size() < pkt.part_count) return;
  const auto raw = routing::reassemble(parts);
  reassembly_.erase(key);
  if (!raw || raw->size() < 8) {
    ++c.reassembly_errors;
    return;
  }
  std::uint32_t src = 0, msg = 0;
  for (int i = 0; i < 4; ++i) {
    src |= static_cast<std::uint32_t>((*raw)[i]) << (8 * i);
    msg |= static_cast<std::uint32_t>((*raw)[4 + i]) << (8 * i);
  }
  if (src == routing::seqno::source(pkt.sequence_number) &&
      msg == routing::seqno::message(pkt.sequence_number)) {
    ++c.messages_reassembled;
  } else {
    ++c.reassembly_errors;
  }
}

void Simulator::on_transmission_complete(Event& ev) {
  routing::Effects fx;
  if (!alive(ev.node)) {
    if (routing::is_data(ev.frame)) fx.drops.push_back(routing::DropReason::NodeDepleted);
    if (std::holds_alternative<routing::ForwardAnt>(ev.frame) ||
        std::holds_alternative<routing::BackwardAnt>(ev.frame)) {
      ++fx.ants_lost;
    }
  } else {
    protocol_->receive(view_, ev.node, ev.from, ev.frame, protocol_rng_, fx);
  }
  apply(fx);
}

void Simulator::on_cbr(NodeId n) {
  if (now_ + cbr_interval_ <= horizon_) schedule(now_ + cbr_interval_, EventKind::CbrGenerate, n);
  if (!alive(n)) return;

  const std::uint32_t msg = next_message_[n]++;
  result_.generation_log.emplace_back(n, now_);
  ++result_.counters.messages_generated;

  std::vector<std::uint8_t> raw(16);
  const std::uint64_t t = static_cast<std::uint64_t>(now_.ns());
  for (int i = 0; i < 4; ++i) {
    raw[i] = static_cast<std::uint8_t>(n >> (8 * i));
    raw[4 + i] = static_cast<std::uint8_t>(msg >> (8 * i));
  }
  for (int i = 0; i < 8; ++i) raw[8 + i] = static_cast<std::uint8_t>(t >> (8 * i));

  routing::Effects fx;
  for (auto& part : routing::split_payload(raw, scenario_.protocol_params.data_parts)) {
    routing::DataPacket pkt;
    pkt.next_node = n;
    pkt.sequence_number = routing::seqno::make(n, msg, part.index);
    pkt.part_index = part.index;
    pkt.part_count = part.count;
    pkt.payload = std::move(part.bytes);
    ++result_.counters.packets_generated;
    protocol_->originate_data(view_, n, std::move(pkt), protocol_rng_, fx);
  }
  apply(fx);
}

void Simulator::on_ant_launch(NodeId n) {
  if (now_ + ant_interval_ <= horizon_) schedule(now_ + ant_interval_, EventKind::AntLaunch, n);
  if (!alive(n)) return;
  routing::Effects fx;
  protocol_->launch_ant(view_, n, protocol_rng_, fx);
  apply(fx);
}

void Simulator::on_harvest_tick() {
  if (now_ + harvest_tick_ <= horizon_) schedule(now_ + harvest_tick_, EventKind::HarvestTick, 0);
  const double tick_s = harvest_tick_.seconds();
  for (NodeId n = 0; n < nodes_.size(); ++n) {
    if (!alive(n)) continue;
    NodeRuntime& rt = nodes_[n];
    if (rt.harvest_current_ua <= 0.0) continue;
    const double before = rt.battery.charge_mah();
    rt.battery = energy::charge(rt.battery, rt.harvest_current_ua, tick_s);
    rt.ledger.harvest_credited_mah += rt.battery.charge_mah() - before;
    rt.ledger.harvest_offered_mah += rt.harvest_current_ua * 1e-3 * tick_s / 3600.0;
  }
}

void Simulator::on_metric_sample() {
  const SimTime next = now_ + sample_interval_;
  if (next <= horizon_) {
    schedule(next, EventKind::MetricSample, 0);
  } else if (now_ < horizon_) {
    schedule(horizon_, EventKind::MetricSample, 0);
  }
  double sum = 0.0;
  double lowest = 1.0;
  for (NodeId n = 0; n < nodes_.size(); ++n) {
    const double r = residual(n);
    sum += r;
    lowest = std::min(lowest, r);
  }
  const RunCounters& c = result_.counters;
  result_.timeline.samples.push_back({now_.seconds(), sum / static_cast<double>(nodes_.size()),
                                      lowest, c.packets_delivered, c.packets_generated,
                                      c.ants_launched, c.ants_completed});
}

RunResult Simulator::run() {
  result_.scenario = scenario_;
  result_.topology = topology_;
  protocol_->initialize(view_);

  const SimTime zero;
  schedule(zero, EventKind::MetricSample, 0);
  if (scenario_.harvesting.enabled) schedule(harvest_tick_, EventKind::HarvestTick, 0);
  if (scenario_.traffic_enabled) {
    Rng ant_rng(derive_seed(scenario_.seed, kAntStream));
    for (NodeId n = 0; n < nodes_.size(); ++n) {
      if (n == sink()) continue;
      // Phases are drawn for every source regardless of protocol so that the
      // CBR schedule is identical across protocols.
      const auto phase = [](Rng& rng, SimTime period) {
        return SimTime::from_ns(
            static_cast<std::int64_t>(rng.uniform() * static_cast<double>(period.ns())));
      };
      const SimTime cbr_phase = phase(traffic_rng_, cbr_interval_);
      const SimTime ant_phase = phase(ant_rng, ant_interval_);
      if (cbr_phase <= horizon_) schedule(cbr_phase, EventKind::CbrGenerate, n);
      if (protocol_->launches_ants() && ant_phase <= horizon_) {
        schedule(ant_phase, EventKind::AntLaunch, n);
      }
    }
  }

  RunCounters& c = result_.counters;
  while (!heap_.empty() && heap_.front().time <= horizon_) {
    std::pop_heap(heap_.begin(), heap_.end(), Later{});
    Event ev = std::move(heap_.back());
    heap_.pop_back();
    if (ev.time < now_) ++c.causality_violations;
    now_ = ev.time;
    ++c.events_processed;
    switch (ev.kind) {
      case EventKind::TransmissionComplete: on_transmission_complete(ev); break;
      case EventKind::RecordTimeout: {
        routing::Effects fx;
        protocol_->on_timer(view_, ev.node, fx);
        apply(fx);
        break;
      }
      case EventKind::AntLaunch: on_ant_launch(ev.node); break;
      case EventKind::CbrGenerate: on_cbr(ev.node); break;
      case EventKind::HarvestTick: on_harvest_tick(); break;
      case EventKind::MetricSample: on_metric_sample(); break;
    }
  }
  now_ = horizon_;
  for (NodeId n = 0; n < nodes_.size(); ++n) settle(n, horizon_);

  c.events_beyond_horizon = heap_.size();
  for (const Event& ev : heap_) {
    if (ev.kind == EventKind::TransmissionComplete && routing::is_data(ev.frame)) {
      ++c.packets_in_flight;
    }
  }
  c.packets_in_flight += protocol_->buffered_data();

  const energy::Battery initial = scenario_.battery_template();
  result_.nodes.reserve(nodes_.size());
  for (NodeId n = 0; n < nodes_.size(); ++n) {
    result_.nodes.push_back({n, topology_.positions[n], initial.charge_mah(),
                             nodes_[n].battery.charge_mah(), nodes_[n].harvest_current_ua,
                             nodes_[n].ledger});
  }
  std::ostringstream tables;
  protocol_->write_tables(tables);
  result_.routing_tables = tables.str();
  return std::move(result_);
}

}  // namespace

RunResult run(const Scenario& scenario, const Topology& topology) {
  scenario.validate();
  if (topology.positions.size() != scenario.node_count ||
      topology.adjacency.size() != scenario.node_count) {
    throw std::invalid_argument("topology size does not match node_count");
  }
  Simulator sim(scenario, topology);
  return sim.run();
}

RunResult run(const Scenario& scenario) {
  scenario.validate();
  const Topology topology =
      generate_topology(derive_seed(scenario.seed, kTopologyStream), scenario.node_count,
                        scenario.area_width_m, scenario.area_height_m, scenario.radio_range_m);
  return run(scenario, topology);
}

}  // namespace rfwsn::sim
