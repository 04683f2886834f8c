#include "pda/cache_sim.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "pda/errors.hpp"

namespace pda {

namespace {

std::string packet_name(PacketId id) {
  return "W(" + std::to_string(id.file) + "," + std::to_string(id.packet) + ")";
}

// Unbiased draw in [0, n): reject values below 2^64 mod n, then reduce.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t x = rng();
  while (x < threshold) x = rng();
  return x % n;
}

void xor_into(std::vector<std::uint8_t>& acc, const std::uint8_t* bytes, size_t n) {
  for (size_t i = 0; i < n; ++i) acc[i] ^= bytes[i];
}

}  // namespace

const std::vector<int>& CachingInstance::cache_rows(int user) const {
  if (user < 0 || user >= pda_.k()) throw IndexOutOfRange("no such user");
  return cache_rows_[static_cast<size_t>(user)];
}

bool CachingInstance::caches(int user, PacketId id) const {
  if (id.file < 0 || id.file >= files_) return false;
  const std::vector<int>& rows = cache_rows(user);
  return std::binary_search(rows.begin(), rows.end(), id.packet);
}

std::int64_t CachingInstance::cache_packet_count(int user) const {
  return static_cast<std::int64_t>(cache_rows(user).size()) * files_;
}

const std::uint8_t* CachingInstance::packet_bytes(PacketId id) const {
  if (!has_payloads()) throw Error("instance carries no payload bytes");
  if (id.file < 0 || id.file >= files_ || id.packet < 0 || id.packet >= pda_.f())
    throw IndexOutOfRange("no such packet");
  return file_bytes_[static_cast<size_t>(id.file)].data() +
         static_cast<size_t>(id.packet) * bytes_per_packet_;
}

CachingInstance place(const Pda& p, int n_files, const std::optional<PayloadSpec>& payloads) {
  const ValidationReport report = validate(p);
  if (!report.valid)
    throw InvalidPda("placement needs a valid array: " + report.violations.front().message);
  if (n_files < p.k()) throw NTooSmall("need at least as many files as users");

  CachingInstance inst(p, n_files);

  inst.cache_rows_.resize(static_cast<size_t>(p.k()));
  for (int col = 0; col < p.k(); ++col) {
    for (int row = 0; row < p.f(); ++row) {
      if (p.at(row, col).is_star()) inst.cache_rows_[static_cast<size_t>(col)].push_back(row);
    }
  }
  inst.occurrences_ = occurrences_by_symbol(p);

  if (payloads) {
    if (payloads->bytes_per_packet < 1) throw ParameterOutOfRange("packet size must be >= 1");
    inst.bytes_per_packet_ = payloads->bytes_per_packet;
    std::mt19937_64 rng(payloads->seed);
    const size_t file_len = static_cast<size_t>(p.f()) * inst.bytes_per_packet_;
    inst.file_bytes_.resize(static_cast<size_t>(n_files));
    for (std::vector<std::uint8_t>& file : inst.file_bytes_) {
      file.resize(file_len);
      size_t i = 0;
      while (i < file_len) {
        std::uint64_t word = rng();
        for (int b = 0; b < 8 && i < file_len; ++b, ++i) {
          file[i] = static_cast<std::uint8_t>(word & 0xff);
          word >>= 8;
        }
      }
    }
  }
  return inst;
}

std::vector<Transmission> deliver(const CachingInstance& inst, const std::vector<int>& demand) {
  const Pda& p = inst.pda();
  if (static_cast<int>(demand.size()) != p.k())
    throw BadDemand("demand needs one entry per user");
  for (const int d : demand) {
    if (d < 0 || d >= inst.files()) throw BadDemand("demanded file out of range");
  }

  std::vector<Transmission> schedule;
  schedule.reserve(static_cast<size_t>(p.s()));
  for (std::int64_t s = 0; s < p.s(); ++s) {
    Transmission tx{s, {}, {}};
    for (const auto& [row, col] : inst.occurrences()[static_cast<size_t>(s)]) {
      tx.summands.push_back(PacketId{demand[static_cast<size_t>(col)], row});
    }
    if (inst.has_payloads()) {
      tx.payload.assign(static_cast<size_t>(inst.bytes_per_packet()), 0);
      for (const PacketId id : tx.summands)
        xor_into(tx.payload, inst.packet_bytes(id), tx.payload.size());
    }
    schedule.push_back(std::move(tx));
  }
  return schedule;
}

std::vector<PacketId> decode(const CachingInstance& inst, const std::vector<int>& demand,
                             const std::vector<Transmission>& schedule, int user) {
  const Pda& p = inst.pda();
  if (user < 0 || user >= p.k()) throw IndexOutOfRange("no such user");
  if (static_cast<int>(demand.size()) != p.k())
    throw BadDemand("demand needs one entry per user");
  const int want = demand[static_cast<size_t>(user)];

  std::vector<PacketId> recovered;
  for (const Transmission& tx : schedule) {
    // The user's packet in this slot is the summand whose row holds the slot
    // symbol in the user's own column; all other summands must sit under stars.
    const PacketId* target = nullptr;
    for (const PacketId& id : tx.summands) {
      if (id.file == want && !p.at(id.packet, user).is_star() &&
          p.at(id.packet, user).symbol() == tx.slot) {
        target = &id;
        break;
      }
    }
    if (target == nullptr) continue;

    std::vector<std::uint8_t> bytes = tx.payload;
    for (const PacketId& id : tx.summands) {
      if (&id == target) continue;
      if (!inst.caches(user, id))
        throw MissingSideInfo("user " + std::to_string(user) + " lacks " + packet_name(id) +
                              " needed for slot " + std::to_string(tx.slot));
      if (!bytes.empty()) xor_into(bytes, inst.packet_bytes(id), bytes.size());
    }
    if (!bytes.empty()) {
      const std::uint8_t* truth = inst.packet_bytes(*target);
      if (!std::equal(bytes.begin(), bytes.end(), truth))
        throw Error("decoded bytes for " + packet_name(*target) + " differ from the source");
    }
    recovered.push_back(*target);
  }
  return recovered;
}

DecodeReport decode_all(const CachingInstance& inst, const std::vector<int>& demand,
                        const std::vector<Transmission>& schedule) {
  const Pda& p = inst.pda();
  DecodeReport report;
  report.recovered.resize(static_cast<size_t>(p.k()));
  report.complete = true;
  report.bytes_ok = true;

  for (int user = 0; user < p.k(); ++user) {
    std::vector<PacketId> got = decode(inst, demand, schedule, user);

    for (const Transmission& tx : schedule) {
      for (const PacketId& id : got) {
        const Cell cell = p.at(id.packet, user);
        if (!cell.is_star() && cell.symbol() == tx.slot) {
          report.trace.push_back("user " + std::to_string(user) + ": slot " +
                                 std::to_string(tx.slot) + " -> " + packet_name(id));
        }
      }
    }

    // Complete when cached rows plus recovered rows cover every packet row.
    std::vector<bool> have(static_cast<size_t>(p.f()), false);
    for (const int row : inst.cache_rows(user)) have[static_cast<size_t>(row)] = true;
    for (const PacketId& id : got) have[static_cast<size_t>(id.packet)] = true;
    if (std::find(have.begin(), have.end(), false) != have.end()) report.complete = false;

    report.recovered[static_cast<size_t>(user)] = std::move(got);
  }
  return report;
}

VerifyMode VerifyMode::exhaustive(std::uint64_t cap) {
  VerifyMode mode;
  mode.kind = Kind::kExhaustive;
  mode.cap = cap;
  return mode;
}

VerifyMode VerifyMode::sample(std::uint64_t count, std::uint64_t seed) {
  VerifyMode mode;
  mode.kind = Kind::kSample;
  mode.samples = count;
  mode.seed = seed;
  return mode;
}

std::string VerifySummary::summary_line() const {
  return "demands=" + std::to_string(demands) + " ok=" + std::to_string(ok) +
         " rate=" + ratio_string(max_rate);
}

namespace {

// Runs one demand through delivery and decoding; returns pass/fail and logs.
bool check_demand(const CachingInstance& inst, const std::vector<int>& demand,
                  VerifySummary& summary, std::ostream* log) {
  const std::vector<Transmission> schedule = deliver(inst, demand);
  const DecodeReport report = decode_all(inst, demand, schedule);
  const bool ok = report.complete && report.bytes_ok;

  const Rational used = Rational(BigInt(schedule.size())) / BigInt(inst.pda().f());
  if (used > summary.max_rate) summary.max_rate = used;
  ++summary.demands;
  if (ok) ++summary.ok;

  if (log != nullptr) {
    std::ostringstream line;
    for (size_t i = 0; i < demand.size(); ++i) {
      if (i > 0) line << ',';
      line << demand[i];
    }
    line << (ok ? " ok" : " fail") << " slots=" << schedule.size();
    *log << line.str() << '\n';
  }
  return ok;
}

}  // namespace

VerifySummary verify_demands(const CachingInstance& inst, const VerifyMode& mode,
                             std::ostream* log) {
  const int k = inst.pda().k();
  const int n = inst.files();
  VerifySummary summary;
  summary.max_rate = Rational(0);

  if (mode.kind == VerifyMode::Kind::kExhaustive) {
    BigInt total = 1;
    for (int i = 0; i < k; ++i) total *= n;
    if (total > BigInt(mode.cap))
      throw CapExceeded("demand space " + total.str() + " exceeds cap " +
                        std::to_string(mode.cap));

    std::vector<int> demand(static_cast<size_t>(k), 0);
    while (true) {
      check_demand(inst, demand, summary, log);
      int pos = k - 1;
      while (pos >= 0 && demand[static_cast<size_t>(pos)] == n - 1) {
        demand[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++demand[static_cast<size_t>(pos)];
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    std::vector<int> demand(static_cast<size_t>(k));
    for (std::uint64_t i = 0; i < mode.samples; ++i) {
      for (int j = 0; j < k; ++j)
        demand[static_cast<size_t>(j)] =
            static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(n)));
      check_demand(inst, demand, summary, log);
    }
  }
  return summary;
}

}  // namespace pda
