public abstract class Abstract0 extends State {
}
