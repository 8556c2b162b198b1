public abstract class Abstract3 extends State {
}
