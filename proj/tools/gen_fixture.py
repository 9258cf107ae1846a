#!/usr/bin/env python3
"""Regenerate tests/fixtures/synthetic/{posts.csv,metadata.csv}.

Twelve teams across three leagues, with three distinct daily joy-share
shapes (high oscillating, flat low, rising ramp) so the clustering
stages have real structure, plus varied posting cadences (steady,
clumped, sparse) so the burstiness spread is non-trivial. Deterministic:
the committed CSVs are the canonical output of this script.
"""

import math
import random
from pathlib import Path

SEED = 20250822
DAYS = 60
DAY = 86400
EPOCH_DAY0 = 1659312000  # 2022-08-01T00:00:00Z

TEAMS = [
    # (team_id, league, geo, group, cadence)
    ("acqualta", "A", "North", "high", "steady"),
    ("borgorosso", "A", "North", "high", "clumped"),
    ("cimafreda", "A", "Center", "high", "steady"),
    ("dorsoduro", "A", "North", "flat", "clumped"),
    ("erbagrassa", "A", "South", "flat", "steady"),
    ("fontenuova", "A", "Center", "rising", "clumped"),
    ("grancolle", "B", "North", "high", "sparse"),
    ("lagodoro", "B", "South", "flat", "steady"),
    ("montenero", "B", "Center", "rising", "sparse"),
    ("pietrabella", "C", "South", "flat", "sparse"),
    ("roccalta", "C", "South", "rising", "steady"),
    ("valchiara", "C", "North", "anger", "steady"),
]

FINAL_RANKS = {
    "acqualta": 1, "borgorosso": 3, "cimafreda": 2, "dorsoduro": 5,
    "erbagrassa": 6, "fontenuova": 4,
    "grancolle": 1, "lagodoro": 3, "montenero": 2,
    "pietrabella": 2, "roccalta": 1, "valchiara": 3,
}


def joy_share(group: str, day: int, rng: random.Random) -> float:
    if group == "high":
        base = 0.52 + 0.18 * math.sin(day / 9.0)
    elif group == "flat":
        base = 0.30
    elif group == "rising":
        base = 0.22 + 0.5 * day / DAYS
    else:  # anger-dominant team: joy rarely wins
        base = 0.18
    return min(0.9, max(0.05, base + rng.uniform(-0.04, 0.04)))


def posts_per_day(cadence: str, day: int, rng: random.Random) -> int:
    if cadence == "steady":
        return rng.choice([2, 3, 3, 4])
    if cadence == "clumped":
        # Matchday-like bursts every few days, quiet in between.
        return rng.choice([6, 8, 10]) if day % 4 == 0 else rng.choice([0, 0, 1])
    # sparse
    return rng.choice([0, 1, 1, 2])


def main() -> None:
    rng = random.Random(SEED)
    out_dir = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "synthetic"
    out_dir.mkdir(parents=True, exist_ok=True)

    post_rows = []
    for team_id, _league, _geo, group, cadence in TEAMS:
        for day in range(DAYS):
            n = posts_per_day(cadence, day, rng)
            seconds = sorted(rng.sample(range(DAY), n))
            for sec in seconds:
                ts = EPOCH_DAY0 + day * DAY + sec
                joy = joy_share(group, day, rng)
                if group == "anger":
                    anger = min(0.9, joy + rng.uniform(0.15, 0.35))
                elif group != "high" and rng.random() < 0.10:
                    # Occasional anger-dominant post (a bad result), so
                    # most teams have a few anger events while the
                    # joy-heavy group keeps none.
                    anger = min(0.92, joy + rng.uniform(0.05, 0.3))
                else:
                    anger = rng.uniform(0.05, 0.9 * joy)
                rest = max(1e-6, 1.0 - joy - anger)
                sad_frac = rng.uniform(0.3, 0.7)
                sadness = rest * sad_frac
                fear = rest - sadness
                total = joy + anger + sadness + fear
                joy, anger, sadness = (round(v / total, 6) for v in (joy, anger, sadness))
                fear = max(0.0, round(1.0 - joy - anger - sadness, 6))
                n_comments = max(1, int(rng.lognormvariate(3.0, 1.0)))
                post_rows.append((team_id, ts, n_comments, joy, anger, sadness, fear))

    # Shuffle rows so ingestion has to sort; keep (team, ts) unique.
    rng.shuffle(post_rows)

    def iso8601(ts: int) -> str:
        days, sec = divmod(ts, DAY)
        # civil from days (era-based; valid for the fixture's range)
        z = days + 719468
        era = z // 146097
        doe = z - era * 146097
        yoe = (doe - doe // 1460 + doe // 36524 - doe // 146096) // 365
        y = yoe + era * 400
        doy = doe - (365 * yoe + yoe // 4 - yoe // 100)
        mp = (5 * doy + 2) // 153
        d = doy - (153 * mp + 2) // 5 + 1
        m = mp + 3 if mp < 10 else mp - 9
        y = y + (1 if m <= 2 else 0)
        h, rem = divmod(sec, 3600)
        mi, s = divmod(rem, 60)
        return f"{y:04d}-{m:02d}-{d:02d}T{h:02d}:{mi:02d}:{s:02d}Z"

    posts = ["team_id,timestamp,n_comments,joy,anger,sadness,fear"]
    for team_id, ts, n_comments, joy, anger, sadness, fear in post_rows:
        posts.append(
            f"{team_id},{iso8601(ts)},{n_comments},{joy},{anger},{sadness},{fear}"
        )
    (out_dir / "posts.csv").write_text("\n".join(posts) + "\n")

    heritage = rng.sample(range(1, len(TEAMS) + 1), len(TEAMS))
    meta = ["team_id,league,geo,pci,unemployment,welfare,market_value,heritage_rank,final_rank"]
    for i, (team_id, league, geo, _group, _cadence) in enumerate(TEAMS):
        pci = round(rng.uniform(16000, 36000), 2)
        unemployment = round(rng.uniform(0.04, 0.22), 4)
        welfare = round(rng.uniform(80, 320), 2)
        market_value = round(rng.uniform(5e6, 6e8), 2)
        meta.append(
            f"{team_id},{league},{geo},{pci},{unemployment},{welfare},"
            f"{market_value},{heritage[i]},{FINAL_RANKS[team_id]}"
        )
    (out_dir / "metadata.csv").write_text("\n".join(meta) + "\n")
    print(f"wrote {out_dir / 'posts.csv'} ({len(post_rows)} posts)")
    print(f"wrote {out_dir / 'metadata.csv'} ({len(TEAMS)} teams)")


if __name__ == "__main__":
    main()
