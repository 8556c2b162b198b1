public abstract class Abstract23 extends State {
}
