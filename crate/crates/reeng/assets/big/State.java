public abstract class State {
}
