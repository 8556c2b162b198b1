public abstract class Abstract21 extends State {
}
