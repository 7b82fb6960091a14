"""Command-line entry point.

    gradstage perform --script demo.evt --ws-port 9000 [--osc-dest host:port]
    gradstage perform --midi-in "Disklavier"
    gradstage replay --script demo.evt --out actions.jsonl [--seed N]
    gradstage check-grad [--trials N]

Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import logging
import sys
import threading
from dataclasses import replace
from pathlib import Path

from . import optimizer
from .config import ConfigError, load_config
from .live import EngineLoop, ScriptFeeder
from .midi_in import MidiUnavailable, open_midi_input
from .osc import OscSender
from .performance import EngineConfig
from .replay import replay_to_bytes
from .script import ScriptError, parse_script

log = logging.getLogger(__name__)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gradstage")
    sub = parser.add_subparsers(dest="command", required=True)

    perform = sub.add_parser("perform", help="run live (script or MIDI input)")
    source = perform.add_mutually_exclusive_group(required=True)
    source.add_argument("--midi-in", metavar="NAME", help="MIDI input port name")
    source.add_argument("--script", metavar="FILE", help="scripted event file")
    perform.add_argument("--osc-dest", metavar="HOST:PORT", help="send OSC telemetry here")
    perform.add_argument("--ws-port", type=int, metavar="N", help="serve WebSocket state stream")
    perform.add_argument("--ws-host", default="127.0.0.1", metavar="HOST")
    perform.add_argument("--seed", type=int, metavar="N")
    perform.add_argument("--config", metavar="FILE", help="key = value config file")

    rep = sub.add_parser("replay", help="headless deterministic run, writes an action log")
    rep.add_argument("--script", required=True, metavar="FILE")
    rep.add_argument("--out", required=True, metavar="FILE")
    rep.add_argument("--seed", type=int, metavar="N")
    rep.add_argument("--config", metavar="FILE")

    check = sub.add_parser("check-grad", help="verify analytic gradients against finite differences")
    check.add_argument("--trials", type=int, default=100, metavar="N")
    check.add_argument("--seed", type=int, default=0, metavar="N")
    return parser


def _load_engine_config(args: argparse.Namespace) -> EngineConfig:
    config = load_config(args.config) if args.config else EngineConfig()
    if args.seed is not None:
        config = replace(config, seed=args.seed)
    return config


def _cmd_replay(args: argparse.Namespace) -> int:
    events = parse_script(Path(args.script).read_bytes())
    payload = replay_to_bytes(events, _load_engine_config(args))
    Path(args.out).write_bytes(payload)
    return 0


def _cmd_check_grad(args: argparse.Namespace) -> int:
    failures = optimizer.gradient_check_sweep(trials=args.trials, seed=args.seed)
    if failures:
        for failure in failures:
            print(failure, file=sys.stderr)
        print(f"check-grad: {len(failures)} mismatches", file=sys.stderr)
        return 1
    print(f"check-grad: {args.trials} states per family OK (backend: "
          f"{_kernel_backend()})")
    return 0


def _kernel_backend() -> str:
    from . import kernels

    return kernels.BACKEND


async def _serve_until(loop: EngineLoop, args: argparse.Namespace, done: threading.Event) -> None:
    from .server import serve_state

    server = await serve_state(loop, args.ws_port, host=args.ws_host)
    print(f"WebSocket state stream on ws://{args.ws_host}:{server.port}", flush=True)
    try:
        while not done.is_set():
            await asyncio.sleep(0.1)
    finally:
        await server.stop()


def _cmd_perform(args: argparse.Namespace) -> int:
    config = _load_engine_config(args)
    loop = EngineLoop(config)
    sender = None
    if args.osc_dest:
        sender = OscSender(args.osc_dest)
        loop.add_snapshot_sink(sender.send_snapshot)

    midi_port = None
    if args.script:
        events = parse_script(Path(args.script).read_bytes())
        feeder = ScriptFeeder(loop, events)
        done = feeder.finished
    else:
        feeder = None
        done = threading.Event()
        midi_port = open_midi_input(args.midi_in, loop.submit_note)

    loop.start()
    if feeder is not None:
        feeder.start()
    try:
        if args.ws_port is not None:
            asyncio.run(_serve_until(loop, args, done))
        else:
            done.wait()
    except KeyboardInterrupt:
        pass
    finally:
        loop.stop()
        if sender is not None:
            sender.close()
        if midi_port is not None:
            midi_port.close()
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "replay":
            return _cmd_replay(args)
        if args.command == "check-grad":
            return _cmd_check_grad(args)
        return _cmd_perform(args)
    except (ScriptError, ConfigError, MidiUnavailable, OSError, ValueError) as exc:
        print(f"gradstage: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
