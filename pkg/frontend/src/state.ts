import { GameSession, MoveChoice, VariantInfo } from './types'

/** Client-side view of a game: the position plus the move being built
 * vertex-by-vertex. Pending selections are keyed by component index, so a
 * component can hold at most one selection — the same constraint the
 * server enforces. */
export interface BoardView {
  variant: VariantInfo
  position: number[]
  pending: Map<number, number>
  status: 'ongoing' | 'finished'
  winner: 'first' | 'second' | null
  toMove: 'first' | 'second'
}

export function newBoardView(variant: VariantInfo, session: GameSession): BoardView {
  return {
    variant,
    position: session.position.slice(),
    pending: new Map(),
    status: session.status,
    winner: session.winner,
    toMove: session.to_move,
  }
}

export function syncBoardView(view: BoardView, session: GameSession): void {
  view.position = session.position.slice()
  view.status = session.status
  view.winner = session.winner
  view.toMove = session.to_move
  view.pending.clear()
}

/** Toggle a vertex selection. Selecting a second vertex in the same
 * component replaces the first one. */
export function selectVertex(view: BoardView, component: number, vertex: number): void {
  if (view.status !== 'ongoing') return
  if (component < 0 || component >= view.position.length) return
  if (vertex < 1 || vertex > view.position[component]) return
  if (view.pending.get(component) === vertex) {
    view.pending.delete(component)
  } else {
    view.pending.set(component, vertex)
  }
}

/** Path segments surviving the deletion of vertex v and its neighbours
 * from an n-path (used for the click preview). */
export function deletionPreview(length: number, vertex: number): number[] {
  const left = vertex - 2
  const right = length - vertex - 1
  return [left, right].filter((n) => n > 0)
}

/** The arity rule of the variant, phrased as the server phrases it.
 * Returns null when the pending move may be submitted. */
export function arityError(view: BoardView): string | null {
  const count = view.pending.size
  if (count === 0) return 'select at least one vertex'
  switch (view.variant.move_rule) {
    case 'disjunctive':
      if (count !== 1) return 'disjunctive play: move in exactly one component'
      return null
    case 'conjunctive':
      if (count !== view.position.length)
        return 'conjunctive play: move in every component'
      return null
    case 'selective':
      return null
  }
}

export function canSubmit(view: BoardView): boolean {
  return view.status === 'ongoing' && arityError(view) === null
}

export function pendingToMove(view: BoardView): MoveChoice[] {
  return [...view.pending.entries()]
    .sort((a, b) => a[0] - b[0])
    .map(([component_index, vertex]) => ({ component_index, vertex }))
}

/** Apply a compound move the way the server does: delete the closed
 * neighbourhood of each chosen vertex, collect the fragments and sort the
 * surviving path lengths in descending order. */
export function applyCompoundMove(position: number[], move: MoveChoice[]): number[] {
  const byComponent = new Map(move.map((c) => [c.component_index, c.vertex]))
  const out: number[] = []
  position.forEach((length, idx) => {
    const vertex = byComponent.get(idx)
    if (vertex === undefined) {
      out.push(length)
    } else {
      out.push(...deletionPreview(length, vertex))
    }
  })
  out.sort((a, b) => b - a)
  return out
}

export function winnerBanner(view: BoardView, humanSide: 'first' | 'second'): string {
  if (view.status !== 'finished' || view.winner === null) return ''
  return view.winner === humanSide ? 'You win' : 'Engine wins'
}
