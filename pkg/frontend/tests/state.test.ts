import { describe, expect, it } from 'vitest'

import {
  BoardView,
  applyCompoundMove,
  arityError,
  canSubmit,
  deletionPreview,
  newBoardView,
  pendingToMove,
  selectVertex,
  winnerBanner,
} from '../src/state'
import { GameSession, VariantInfo } from '../src/types'

function variant(rule: VariantInfo['move_rule']): VariantInfo {
  return { name: `${rule}-test`, move_rule: rule, ending: 'long', play: 'normal' }
}

function session(position: number[]): GameSession {
  return {
    id: 'x',
    variant: 'disj-normal',
    position,
    status: 'ongoing',
    winner: null,
    to_move: 'first',
    history: [],
  }
}

function view(rule: VariantInfo['move_rule'], position: number[]): BoardView {
  return newBoardView(variant(rule), session(position))
}

describe('deletionPreview', () => {
  it('removes the closed neighbourhood of the chosen vertex', () => {
    expect(deletionPreview(5, 3)).toEqual([1, 1])
    expect(deletionPreview(5, 1)).toEqual([3])
    expect(deletionPreview(5, 5)).toEqual([3])
    expect(deletionPreview(3, 2)).toEqual([])
    expect(deletionPreview(1, 1)).toEqual([])
  })
})

describe('selectVertex', () => {
  it('toggles and replaces within a component', () => {
    const v = view('selective', [5, 3])
    selectVertex(v, 0, 2)
    expect(v.pending.get(0)).toBe(2)
    selectVertex(v, 0, 4)
    expect(v.pending.get(0)).toBe(4)
    selectVertex(v, 0, 4)
    expect(v.pending.has(0)).toBe(false)
  })

  it('ignores out-of-range clicks', () => {
    const v = view('selective', [5, 3])
    selectVertex(v, 2, 1)
    selectVertex(v, 0, 6)
    selectVertex(v, 0, 0)
    expect(v.pending.size).toBe(0)
  })

  it('ignores clicks on a finished board', () => {
    const v = view('selective', [5])
    v.status = 'finished'
    selectVertex(v, 0, 1)
    expect(v.pending.size).toBe(0)
  })
})

describe('arity rules', () => {
  it('disjunctive: exactly one component', () => {
    const v = view('disjunctive', [5, 3])
    expect(canSubmit(v)).toBe(false)
    selectVertex(v, 0, 2)
    expect(canSubmit(v)).toBe(true)
    selectVertex(v, 1, 1)
    expect(canSubmit(v)).toBe(false)
    expect(arityError(v)).toMatch(/exactly one/)
  })

  it('conjunctive: every component', () => {
    const v = view('conjunctive', [5, 3])
    selectVertex(v, 0, 2)
    expect(canSubmit(v)).toBe(false)
    expect(arityError(v)).toMatch(/every component/)
    selectVertex(v, 1, 1)
    expect(canSubmit(v)).toBe(true)
  })

  it('selective: any nonempty subset', () => {
    const v = view('selective', [5, 3])
    expect(canSubmit(v)).toBe(false)
    selectVertex(v, 1, 3)
    expect(canSubmit(v)).toBe(true)
    selectVertex(v, 0, 1)
    expect(canSubmit(v)).toBe(true)
  })
})

describe('pendingToMove / applyCompoundMove', () => {
  it('orders choices by component and mirrors the server deletion', () => {
    const v = view('conjunctive', [5, 3])
    selectVertex(v, 1, 2)
    selectVertex(v, 0, 3)
    const move = pendingToMove(v)
    expect(move).toEqual([
      { component_index: 0, vertex: 3 },
      { component_index: 1, vertex: 2 },
    ])
    expect(applyCompoundMove([5, 3], move)).toEqual([1, 1])
    expect(applyCompoundMove([18], [{ component_index: 0, vertex: 6 }])).toEqual([11, 4])
    expect(applyCompoundMove([5, 3], [{ component_index: 1, vertex: 2 }])).toEqual([5])
  })
})

describe('winnerBanner', () => {
  it('reflects the play convention via the server-reported winner', () => {
    const v = view('disjunctive', [1])
    expect(winnerBanner(v, 'first')).toBe('')
    v.status = 'finished'
    v.winner = 'first'
    expect(winnerBanner(v, 'first')).toBe('You win')
    expect(winnerBanner(v, 'second')).toBe('Engine wins')
  })
})
