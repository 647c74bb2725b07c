"""Ingestion of raw multi-channel EMG recordings.

A recording is a plain text file with one row per time sample and one
whitespace-separated numeric column per channel. Each file holds every trial
of one (subject, action) pair back to back; trials are recovered by an even
split along the time axis. Channels of a trial are further sliced into
non-overlapping analysis windows (segments) for feature extraction.

Dataset layout is described by a manifest: a flat key-value text file that
names the root directory, the per-file trial count, the channel count, and
one ``entry`` line per recording file. For the public physical-action corpus
(4 subjects x 20 actions x 15 trials) a manifest can also be generated by
scanning the unpacked directory tree.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

# Class ids for the 20 physical actions: 1-10 normal, 11-20 aggressive.
ACTION_LABELS = {
    1: "Bowing",
    2: "Clapping",
    3: "Handshaking",
    4: "Hugging",
    5: "Jumping",
    6: "Running",
    7: "Seating",
    8: "Standing",
    9: "Walking",
    10: "Waving",
    11: "Elbowing",
    12: "Frontkicking",
    13: "Hammering",
    14: "Headering",
    15: "Kneeing",
    16: "Pulling",
    17: "Punching",
    18: "Pushing",
    19: "Side-kicking",
    20: "Slapping",
}


class MalformedLineError(ValueError):
    """A data line has the wrong field count or a non-numeric/non-finite field."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class EmptyRecordingError(ValueError):
    """The input stream contains no data lines."""


class TooShortError(ValueError):
    """Recording too short to yield at least one sample per trial."""


class InvalidWindowError(ValueError):
    """Window length outside 1..N."""


class MissingFileError(FileNotFoundError):
    """A manifest entry points at a path that does not exist."""


@dataclass
class MultiChannelRecording:
    """One raw recording file: all trials of one subject performing one action.

    Attributes:
        samples: float array of shape (N_total, M); rows are time samples,
            columns are channels.
        subject_id: integer subject identifier.
        action_label: class id of the recorded action (1..C).
    """

    samples: np.ndarray
    subject_id: int
    action_label: int

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=float)

    @property
    def n_samples(self) -> int:
        return self.samples.shape[0]

    @property
    def n_channels(self) -> int:
        return self.samples.shape[1]


@dataclass
class Pattern:
    """One classification unit: a single trial with M channels of N samples.

    Attributes:
        channels: float array of shape (M, N).
        label: class id (1..C).
        subject_id: subject the trial came from.
        trial_index: 1-based position of the trial within its recording.
    """

    channels: np.ndarray
    label: int
    subject_id: int
    trial_index: int

    def __post_init__(self):
        self.channels = np.asarray(self.channels, dtype=float)

    @property
    def n_channels(self) -> int:
        return self.channels.shape[0]

    @property
    def n_samples(self) -> int:
        return self.channels.shape[1]


@dataclass
class Segment:
    """A length-L analysis window cut from one channel of one pattern."""

    values: np.ndarray
    channel: int = 0
    window_index: int = 0
    pattern_index: int = 0

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)

    def __len__(self) -> int:
        return self.values.shape[0]


@dataclass
class ManifestEntry:
    """One recording file: relative path plus its subject and action label."""

    path: str
    subject_id: int
    action_label: int


@dataclass
class DatasetManifest:
    """Description of where the dataset lives and how to interpret each file.

    Attributes:
        root: directory all entry paths are relative to.
        entries: one per recording file, unique on (subject_id, action_label).
        trials_per_file: number of equal-length trials per recording (R).
        channels: channel count every file must have (M).
    """

    root: str
    entries: list[ManifestEntry] = field(default_factory=list)
    trials_per_file: int = 15
    channels: int = 8

    def __post_init__(self):
        seen = set()
        for e in self.entries:
            key = (e.subject_id, e.action_label)
            if key in seen:
                raise ValueError(
                    f"duplicate manifest entry for subject {e.subject_id}, "
                    f"label {e.action_label}"
                )
            seen.add(key)


def parse_recording(
    text,
    expected_channels: int,
    subject_id: int = 0,
    action_label: int = 0,
) -> MultiChannelRecording:
    """Parse a whitespace-delimited numeric recording.

    Args:
        text: a string or an iterable of lines.
        expected_channels: required field count per data line.
        subject_id: subject id stored on the result.
        action_label: class id stored on the result.

    Returns:
        MultiChannelRecording with one row per non-empty line, in input order.

    Raises:
        MalformedLineError: wrong field count, or a field that is not a
            finite number. Line numbers are 1-based over all physical lines.
        EmptyRecordingError: no data lines at all.
    """
    if expected_channels < 1:
        raise ValueError("expected_channels must be >= 1")
    lines = text.splitlines() if isinstance(text, str) else text
    rows = []
    line_no = 0
    for line_no, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        fields = stripped.split()
        if len(fields) != expected_channels:
            raise MalformedLineError(
                line_no,
                f"expected {expected_channels} fields, got {len(fields)}",
            )
        try:
            row = [float(f) for f in fields]
        except ValueError:
            raise MalformedLineError(line_no, f"non-numeric field in {fields!r}") from None
        if not all(np.isfinite(row)):
            raise MalformedLineError(line_no, "non-finite value")
        rows.append(row)
    if not rows:
        raise EmptyRecordingError("no data lines in recording")
    samples = np.array(rows, dtype=float)
    return MultiChannelRecording(samples, subject_id, action_label)


def split_trials(rec: MultiChannelRecording, trials: int) -> list[Pattern]:
    """Split a recording into `trials` equal-length patterns.

    Each pattern gets N = floor(N_total / trials) samples per channel;
    trailing remainder samples are dropped.

    Raises:
        TooShortError: if the recording has fewer samples than trials.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = rec.n_samples // trials
    if n < 1:
        raise TooShortError(
            f"{rec.n_samples} samples cannot supply {trials} non-empty trials"
        )
    out = []
    for t in range(trials):
        block = rec.samples[t * n : (t + 1) * n, :]
        out.append(
            Pattern(
                channels=block.T.copy(),
                label=rec.action_label,
                subject_id=rec.subject_id,
                trial_index=t + 1,
            )
        )
    return out


def segment_channel(
    x,
    window: int,
    channel: int = 0,
    pattern_index: int = 0,
) -> list[Segment]:
    """Slice one channel into floor(N / window) non-overlapping segments.

    Segment w (1-based) holds samples (w-1)*window+1 .. w*window; any
    remainder is dropped.

    Raises:
        InvalidWindowError: if window < 1 or window > len(x).
    """
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    if window < 1 or window > n:
        raise InvalidWindowError(f"window {window} not in 1..{n}")
    n_w = n // window
    return [
        Segment(
            values=x[w * window : (w + 1) * window].copy(),
            channel=channel,
            window_index=w + 1,
            pattern_index=pattern_index,
        )
        for w in range(n_w)
    ]


def window_samples(sampling_rate_hz: float, duration_ms: float = 200.0) -> int:
    """Convert a window duration in milliseconds to a sample count."""
    if sampling_rate_hz <= 0:
        raise ValueError("sampling_rate_hz must be positive")
    if duration_ms <= 0:
        raise ValueError("duration_ms must be positive")
    return max(1, int(round(sampling_rate_hz * duration_ms / 1000.0)))


def read_manifest(path: str) -> DatasetManifest:
    """Read a flat key-value manifest file.

    Recognized keys (one ``key = value`` per line; '#' starts a comment):

    * ``root``: directory the entry paths are relative to. A relative root
      is resolved against the manifest file's own directory. Default: the
      manifest's directory.
    * ``trials``: trials per recording file (default 15).
    * ``channels``: channel count (default 8).
    * ``entry``: repeated; value is ``<relative-path> <subject_id> <label>``.
      The path may contain spaces; the last two fields are the ids.

    Raises:
        MissingFileError: manifest file absent.
        ValueError: malformed line or unknown key.
    """
    if not os.path.isfile(path):
        raise MissingFileError(f"manifest not found: {path}")
    base = os.path.dirname(os.path.abspath(path))
    root = base
    trials = 15
    channels = 8
    entries: list[ManifestEntry] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{line_no}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            if key == "root":
                root = value if os.path.isabs(value) else os.path.join(base, value)
            elif key == "trials":
                trials = int(value)
            elif key == "channels":
                channels = int(value)
            elif key == "entry":
                parts = value.rsplit(None, 2)
                if len(parts) != 3:
                    raise ValueError(
                        f"{path}:{line_no}: entry needs '<path> <subject> <label>'"
                    )
                entries.append(ManifestEntry(parts[0], int(parts[1]), int(parts[2])))
            else:
                raise ValueError(f"{path}:{line_no}: unknown key {key!r}")
    return DatasetManifest(root=root, entries=entries, trials_per_file=trials, channels=channels)


def load_dataset(manifest: DatasetManifest) -> list[Pattern]:
    """Load and split every manifest entry into labeled patterns.

    Returns entries' trials concatenated in manifest order, trials_per_file
    patterns per entry.

    Raises:
        MissingFileError: an entry path does not exist.
        MalformedLineError, EmptyRecordingError: propagated with the file
            path prepended to the message.
    """
    patterns: list[Pattern] = []
    for entry in manifest.entries:
        full = os.path.join(manifest.root, entry.path)
        if not os.path.isfile(full):
            raise MissingFileError(f"recording not found: {full}")
        with open(full, "r", encoding="utf-8") as fh:
            try:
                rec = parse_recording(
                    fh,
                    manifest.channels,
                    subject_id=entry.subject_id,
                    action_label=entry.action_label,
                )
            except MalformedLineError as exc:
                raise MalformedLineError(exc.line_no, f"{full}: {exc}") from None
            except EmptyRecordingError:
                raise EmptyRecordingError(f"{full}: no data lines") from None
        patterns.extend(split_trials(rec, manifest.trials_per_file))
    return patterns


def _normalize_action_name(name: str) -> str:
    return "".join(ch for ch in name.lower() if ch.isalpha())


_ACTION_BY_NORMALIZED = {
    _normalize_action_name(name): label for label, name in ACTION_LABELS.items()
}


def scan_action_tree(
    root: str,
    trials_per_file: int = 15,
    channels: int = 8,
) -> DatasetManifest:
    """Build a manifest by scanning an unpacked physical-action directory tree.

    Walks `root` looking for ``*.txt`` files whose stem matches an action
    name (case/punctuation-insensitive, e.g. ``Side-kicking.txt``). The
    subject id is taken from the digits of the nearest ancestor directory
    that contains any (``sub1`` -> 1). Entries are sorted by
    (subject_id, action_label) so the scan order is deterministic.

    Raises:
        MissingFileError: root directory absent.
        ValueError: a matched file has no identifiable subject directory,
            or two files map to the same (subject, action).
    """
    if not os.path.isdir(root):
        raise MissingFileError(f"dataset root not found: {root}")
    root = os.path.abspath(root)
    entries: list[ManifestEntry] = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for fname in sorted(filenames):
            stem, ext = os.path.splitext(fname)
            if ext.lower() != ".txt":
                continue
            label = _ACTION_BY_NORMALIZED.get(_normalize_action_name(stem))
            if label is None:
                continue
            subject = _subject_from_path(os.path.relpath(dirpath, root))
            if subject is None:
                raise ValueError(
                    f"cannot infer subject id for {os.path.join(dirpath, fname)}"
                )
            rel = os.path.relpath(os.path.join(dirpath, fname), root)
            entries.append(ManifestEntry(rel, subject, label))
    entries.sort(key=lambda e: (e.subject_id, e.action_label))
    return DatasetManifest(
        root=root,
        entries=entries,
        trials_per_file=trials_per_file,
        channels=channels,
    )


def _subject_from_path(relpath: str) -> int | None:
    # Nearest ancestor directory with digits names the subject (sub1, s02, ...).
    parts = [p for p in relpath.split(os.sep) if p and p != "."]
    for part in reversed(parts):
        digits = "".join(ch for ch in part if ch.isdigit())
        if digits:
            return int(digits)
    return None
